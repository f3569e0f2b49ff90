#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace revmap {

using Point = std::uint32_t;

/// A bijection of {0, ..., degree-1}.
///
/// Products act on the right: (a * b)(p) = b(a(p)), i.e. `a` is applied
/// first. Conjugation follows the same convention, x^y = y^-1 x y.
/// Permutations are totally ordered lexicographically by their image
/// sequences, which puts the identity first among permutations of a degree.
class Permutation {
 public:
  Permutation() = default;

  /// Throws ValidationError unless `images` is a bijection of its index set.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  /// Builds a permutation from disjoint cycles. Points not mentioned are
  /// fixed. Throws ValidationError on out-of-range or repeated points.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);

  /// Parses disjoint-cycle notation such as "(0 1 2)(3 4)" or "()".
  /// Points are separated by whitespace or commas.
  static Permutation parse(std::string_view text, std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point p) const { return images_[p]; }
  std::span<const Point> images() const { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  Permutation pow(long long k) const;

  bool is_identity() const;
  std::size_t order() const;

  /// Largest point moved plus one; 0 for the identity.
  std::size_t support_bound() const;

  /// Disjoint-cycle notation, "()" for the identity.
  std::string to_cycle_string() const;

  /// Same permutation on a larger point set (extra points fixed).
  Permutation extended(std::size_t degree) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace revmap
