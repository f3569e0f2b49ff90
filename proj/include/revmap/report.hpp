#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

namespace revmap {

using Json = nlohmann::ordered_json;

enum class CaseStatus { Pass, Fail, Skip };

std::string to_string(CaseStatus status);

struct CaseResult {
  std::string name;
  CaseStatus status = CaseStatus::Pass;
  std::string reason;
  Json record = Json::object();  // the full offending record for failures
  std::string repro;             // command line reproducing a failure
};

struct Report {
  std::string suite;
  std::vector<CaseResult> cases;

  void add(CaseResult result) { cases.push_back(std::move(result)); }
  /// Appends a pass or a fail depending on `ok`.
  void check(bool ok, std::string name, std::string reason, Json record = Json::object(),
             std::string repro = {});
  void merge(const Report& other);

  std::size_t passed() const;
  std::size_t failed() const;
  std::size_t skipped() const;
  bool ok() const { return failed() == 0; }

  Json to_json() const;
  /// One header line plus one line per case.
  std::string to_csv() const;
  /// Aligned columns for humans.
  std::string to_text() const;
};

}  // namespace revmap
