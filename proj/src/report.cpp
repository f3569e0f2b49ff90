#include "revmap/report.hpp"

#include <algorithm>
#include <sstream>

namespace revmap {

namespace {

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_string(CaseStatus status) {
  switch (status) {
    case CaseStatus::Pass: return "pass";
    case CaseStatus::Fail: return "fail";
    case CaseStatus::Skip: return "skip";
  }
  return "?";
}

void Report::check(bool ok, std::string name, std::string reason, Json record, std::string repro) {
  CaseResult result;
  result.name = std::move(name);
  result.status = ok ? CaseStatus::Pass : CaseStatus::Fail;
  result.reason = std::move(reason);
  result.record = std::move(record);
  if (!ok) result.repro = std::move(repro);
  cases.push_back(std::move(result));
}

void Report::merge(const Report& other) {
  cases.insert(cases.end(), other.cases.begin(), other.cases.end());
}

std::size_t Report::passed() const {
  return static_cast<std::size_t>(std::count_if(
      cases.begin(), cases.end(), [](const CaseResult& c) { return c.status == CaseStatus::Pass; }));
}

std::size_t Report::failed() const {
  return static_cast<std::size_t>(std::count_if(
      cases.begin(), cases.end(), [](const CaseResult& c) { return c.status == CaseStatus::Fail; }));
}

std::size_t Report::skipped() const {
  return static_cast<std::size_t>(std::count_if(
      cases.begin(), cases.end(), [](const CaseResult& c) { return c.status == CaseStatus::Skip; }));
}

Json Report::to_json() const {
  Json out;
  out["suite"] = suite;
  out["total"] = cases.size();
  out["pass"] = passed();
  out["fail"] = failed();
  out["skip"] = skipped();
  Json list = Json::array();
  for (const auto& c : cases) {
    Json item;
    item["name"] = c.name;
    item["status"] = to_string(c.status);
    if (!c.reason.empty()) item["reason"] = c.reason;
    if (!c.record.empty()) item["record"] = c.record;
    if (!c.repro.empty()) item["repro"] = c.repro;
    list.push_back(std::move(item));
  }
  out["cases"] = std::move(list);
  return out;
}

std::string Report::to_csv() const {
  std::ostringstream out;
  out << "suite,case,status,reason\n";
  for (const auto& c : cases) {
    out << csv_field(suite) << ',' << csv_field(c.name) << ',' << to_string(c.status) << ','
        << csv_field(c.reason) << '\n';
  }
  return out.str();
}

std::string Report::to_text() const {
  std::size_t width = 4;
  for (const auto& c : cases) width = std::max(width, c.name.size());
  std::ostringstream out;
  for (const auto& c : cases) {
    out << to_string(c.status) << "  " << c.name << std::string(width - c.name.size() + 2, ' ')
        << c.reason << '\n';
    if (!c.repro.empty()) out << "      repro: " << c.repro << '\n';
  }
  out << suite << ": " << passed() << " pass, " << failed() << " fail, " << skipped()
      << " skip (" << cases.size() << " total)\n";
  return out.str();
}

}  // namespace revmap
