#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace revmap {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: a non-bijective permutation, an element outside its
/// group, a family parameter outside its domain, and so on.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive enumeration would exceed its configured cap.
class OverflowError : public Error {
 public:
  OverflowError(const std::string& what, std::size_t cap)
      : Error(what + " (cap " + std::to_string(cap) + ")"), cap_(cap) {}

  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

/// A coset incidence structure that fails to be a well-formed map.
class StructuralError : public Error {
 public:
  using Error::Error;
};

}  // namespace revmap
