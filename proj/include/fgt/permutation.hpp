#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fgt {

using Point = std::uint32_t;

/// A bijection of {0, ..., n-1} stored as its image array.
///
/// Products compose left to right: (a * b)(x) = b(a(x)), i.e. "apply a, then
/// b". With this convention x -> x * g is a right action and the
/// right-regular representation is a homomorphism.
class Permutation {
 public:
  Permutation() = default;
  /// Identity on `degree` points.
  explicit Permutation(std::size_t degree);
  /// Validates bijectivity; throws ValidationError naming a repeated or
  /// out-of-range image.
  explicit Permutation(std::vector<Point> images);

  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles);
  /// Accepts cycle notation "(0 1 2)(3 4)" (commas allowed, "()" is the
  /// identity) or a JSON-style image array "[1, 2, 0]".
  static Permutation parse(std::string_view text, std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  Point operator[](Point x) const { return images_[x]; }
  const std::vector<Point>& images() const { return images_; }

  bool is_identity() const;
  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  Permutation pow(std::int64_t exponent) const;
  /// g^-1 * this * g
  Permutation conjugate_by(const Permutation& g) const;

  /// Least common multiple of the cycle lengths.
  std::uint64_t order() const;
  /// Non-trivial cycles, each starting at its smallest point, ordered by it.
  std::vector<std::vector<Point>> cycles() const;
  /// All cycle lengths (fixed points included), descending.
  std::vector<std::size_t> cycle_type() const;
  bool is_even() const;
  std::optional<Point> first_moved_point() const;

  std::string to_cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.images_ <=> b.images_; }

 private:
  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace fgt
