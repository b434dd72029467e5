#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fprlab/common.hpp"

namespace fprlab {

/// A bijection of {0, ..., n-1} stored as its image sequence.
///
/// Permutations act on the right: `p.image(a)` is a^p, and `p * q` first
/// applies p and then q, so (a)^(p*q) = (a^p)^q. Cycle notation in text
/// form is 1-indexed.
class Permutation {
 public:
  Permutation() = default;

  /// Identity of the given degree.
  explicit Permutation(std::size_t degree);

  /// Validates that `images` is a bijection.
  explicit Permutation(std::vector<Point> images);

  /// Parses disjoint-cycle notation such as "(1,2,3)(4,5)" or "()" in
  /// the given degree. Points are 1-indexed.
  static Permutation from_cycles(std::size_t degree, std::string_view text);

  /// Builds from cycles given with 0-indexed points.
  static Permutation from_cycle_list(std::size_t degree,
                                     const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const { return images_.size(); }
  Point image(Point a) const { return images_[a]; }
  Point operator[](Point a) const { return images_[a]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  Permutation pow(long long exponent) const;

  /// Element order, the lcm of the cycle lengths.
  std::uint64_t order() const;

  std::size_t num_fixed_points() const;
  std::size_t num_cycles() const;

  /// Cycle lengths (including fixed points as 1-cycles), sorted ascending.
  std::vector<std::size_t> cycle_type() const;

  /// Nontrivial cycles as 0-indexed point lists, each starting at its least
  /// point, ordered by that point.
  std::vector<std::vector<Point>> cycles() const;

  /// 1-indexed disjoint cycle notation; the identity prints as "()".
  std::string to_cycle_string() const;

  /// g^-1 * this * g, i.e. the conjugate this^g.
  Permutation conjugate_by(const Permutation& g) const;

  std::size_t hash() const;

  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) return a.degree() <=> b.degree();
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<Point> images_;
};

/// The product that applies p first and q second: a -> q(p(a)).
Permutation compose(const Permutation& p, const Permutation& q);

/// All points a with a^p = a, ascending.
std::vector<Point> fixed_points(const Permutation& p);

/// Parses a comma-separated list of permutations in cycle notation, e.g.
/// "(1,2,3,4,5),(1,2)(3,5)". Commas inside parentheses separate points.
std::vector<Permutation> parse_permutation_list(std::size_t degree, std::string_view text);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const { return p.hash(); }
};

}  // namespace fprlab
