#include "revmap/permutation.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include "revmap/errors.hpp"
#include "revmap/numeric.hpp"

namespace revmap {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p]) {
      throw ValidationError("permutation images are not a bijection of 0.." +
                            std::to_string(images_.size() - 1));
    }
    seen[p] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  Permutation result;
  result.images_ = std::move(images);
  return result;
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point p = cycle[i];
      if (p >= degree) {
        throw ValidationError("cycle point " + std::to_string(p) +
                              " outside domain of size " + std::to_string(degree));
      }
      if (used[p]) {
        throw ValidationError("point " + std::to_string(p) + " repeated in cycles");
      }
      used[p] = true;
      images[p] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::parse(std::string_view text, std::size_t degree) {
  std::vector<std::vector<Point>> cycles;
  std::vector<Point>* current = nullptr;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++i;
    } else if (c == '(') {
      if (current != nullptr) throw ValidationError("nested '(' in cycle notation");
      cycles.emplace_back();
      current = &cycles.back();
      ++i;
    } else if (c == ')') {
      if (current == nullptr) throw ValidationError("unmatched ')' in cycle notation");
      current = nullptr;
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      if (current == nullptr) throw ValidationError("point outside a cycle in notation");
      Point value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<Point>(text[i] - '0');
        ++i;
      }
      current->push_back(value);
    } else {
      throw ValidationError(std::string("unexpected character '") + c +
                            "' in cycle notation");
    }
  }
  if (current != nullptr) throw ValidationError("unterminated cycle in notation");
  return from_cycles(degree, cycles);
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree()) {
    throw ValidationError("cannot multiply permutations of different degree");
  }
  Permutation result;
  result.images_.resize(images_.size());
  for (std::size_t p = 0; p < images_.size(); ++p) result.images_[p] = rhs.images_[images_[p]];
  return result;
}

Permutation Permutation::inverse() const {
  Permutation result;
  result.images_.resize(images_.size());
  for (std::size_t p = 0; p < images_.size(); ++p) result.images_[images_[p]] = static_cast<Point>(p);
  return result;
}

Permutation Permutation::pow(long long k) const {
  Permutation base = k < 0 ? inverse() : *this;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k) : static_cast<unsigned long long>(k);
  Permutation result = identity(degree());
  while (e > 0) {
    if (e & 1ULL) result = result * base;
    base = base * base;
    e >>= 1ULL;
  }
  return result;
}

bool Permutation::is_identity() const {
  for (std::size_t p = 0; p < images_.size(); ++p) {
    if (images_[p] != p) return false;
  }
  return true;
}

std::size_t Permutation::order() const {
  std::vector<bool> seen(images_.size(), false);
  long long result = 1;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    long long length = 0;
    for (Point p = static_cast<Point>(start); !seen[p]; p = images_[p]) {
      seen[p] = true;
      ++length;
    }
    result = lcm(result, length);
  }
  return static_cast<std::size_t>(result);
}

std::size_t Permutation::support_bound() const {
  for (std::size_t p = images_.size(); p > 0; --p) {
    if (images_[p - 1] != p - 1) return p;
  }
  return 0;
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream out;
  std::vector<bool> seen(images_.size(), false);
  bool any = false;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    any = true;
    out << '(';
    bool first = true;
    for (Point p = static_cast<Point>(start); !seen[p]; p = images_[p]) {
      seen[p] = true;
      if (!first) out << ' ';
      out << p;
      first = false;
    }
    out << ')';
  }
  if (!any) out << "()";
  return out.str();
}

Permutation Permutation::extended(std::size_t degree) const {
  if (degree < images_.size()) throw ValidationError("cannot shrink a permutation");
  Permutation result = identity(degree);
  for (std::size_t p = 0; p < images_.size(); ++p) result.images_[p] = images_[p];
  return result;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (Point x : p.images()) {
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace revmap
