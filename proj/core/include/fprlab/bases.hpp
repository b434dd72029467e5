#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fprlab/classes.hpp"
#include "fprlab/perm_group.hpp"

namespace fprlab {

/// true iff the pointwise stabilizer of `points` in G is trivial.
bool is_base(const PermGroup& G, std::span<const Point> points);

struct BaseOptions {
  std::uint64_t node_budget = 5'000'000;
};

struct BaseSize {
  /// b(G) when exact; otherwise lower <= b(G) <= upper.
  std::uint64_t lower = 0;
  std::uint64_t upper = 0;
  bool exact() const { return lower == upper; }
  /// A base of size `upper`.
  std::vector<Point> witness;
  std::uint64_t nodes = 0;
};

/// Minimal base size (over sets of points) by iterative deepening. The next
/// point ranges over orbit representatives of the current stabilizer, tried
/// largest orbit first; a branch is cut when (largest orbit)^(points left)
/// is below the stabilizer order. When the budget runs out the result holds
/// the proven lower bound and the greedy base as upper bound.
BaseSize base_size_exact(const PermGroup& G, const BaseOptions& options = {});

/// Greedy base: repeatedly add a point of a largest orbit of the stabilizer.
std::vector<Point> greedy_base(const PermGroup& G);

/// Sum over classes of prime order elements of |x^G| * fpr(x)^c. Q(G,c),
/// the probability that a random c-tuple is not a base, is at most this.
Rational qhat(const ClassTable& table, std::uint64_t c);

struct RandomBaseEstimate {
  std::uint64_t c = 0;
  std::uint64_t trials = 0;
  std::uint64_t bases = 0;
  std::uint64_t seed = 0;
  /// bases / trials.
  Rational estimate;
};

/// Fraction of c-tuples of points, drawn independently and uniformly with
/// repetition, that are bases. Deterministic given the seed: the trials are
/// split into fixed chunks, each with its own substream.
RandomBaseEstimate random_base_prob(const PermGroup& G, std::uint64_t c, std::uint64_t trials,
                                    std::uint64_t seed = kDefaultSeed);

/// Exact fraction of all n^c tuples that are bases (small cases only).
Rational exact_base_tuple_fraction(const PermGroup& G, std::uint64_t c);

struct BoundsCheck {
  std::uint64_t n = 0;
  BigInt order = 1;
  std::uint64_t b = 0;
  std::uint64_t mu = 0;
  double log_ratio = 0;  // log|G| / log n
  double log2_order = 0;
  /// log|G|/log n <= b <= log2|G|, decided exactly as |G| <= n^b and
  /// 2^b <= |G|.
  bool sandwich_holds = false;
  /// b * mu >= n.
  bool coupling_holds = false;
};

BoundsCheck bounds_check(const PermGroup& G, std::uint64_t b, std::uint64_t mu);

struct BaseReport {
  std::string action;
  BaseSize b;
  std::map<std::uint64_t, Rational> qhat;
  std::map<std::uint64_t, RandomBaseEstimate> random;
  BoundsCheck bounds;
};

}  // namespace fprlab
