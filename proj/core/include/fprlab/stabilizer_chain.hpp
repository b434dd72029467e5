#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "fprlab/common.hpp"
#include "fprlab/permutation.hpp"

namespace fprlab {

/// One level of a stabilizer chain: the stabilizer G^(i) of the first i
/// base points, its strong generators, and a transversal for the orbit of
/// the i-th base point under G^(i).
struct ChainLevel {
  Point base_point = 0;
  std::vector<Permutation> generators;
  std::vector<Point> orbit;
  /// orbit_position[a] is the index of a in `orbit`, or -1.
  std::vector<std::int32_t> orbit_position;
  /// transversal[k] maps base_point to orbit[k].
  std::vector<Permutation> transversal;
  std::vector<Permutation> inverse_transversal;
};

/// Base and strong generating set built by randomised Schreier-Sims with a
/// deterministic Schreier-generator verification pass (skipped only when a
/// known group order is reached, which certifies completeness).
class StabilizerChain {
 public:
  struct Options {
    std::uint64_t seed = 0;
    /// Points that must begin the base, in order.
    std::vector<Point> base_prefix;
    /// Upper bound on the order known from elsewhere; if the randomised
    /// phase reaches it the chain is complete and verification is skipped.
    std::optional<BigInt> known_order;
  };

  StabilizerChain() = default;

  static StabilizerChain build(std::size_t degree, std::span<const Permutation> generators,
                               const Options& options);

  std::size_t degree() const { return degree_; }
  std::span<const ChainLevel> levels() const { return levels_; }
  std::vector<Point> base() const;

  BigInt order() const;
  /// Throws CapExceeded when the order does not fit in 63 bits.
  std::uint64_t order_u64() const;

  /// Order of the stabilizer of the first `depth` base points.
  BigInt stabilizer_order(std::size_t depth) const;

  struct SiftResult {
    Permutation residue;
    /// Level at which sifting stopped; equals levels().size() when every
    /// level was passed.
    std::size_t depth;
  };
  SiftResult sift(const Permutation& g) const;

  bool contains(const Permutation& g) const;

  /// Mixed-radix index of a member in [0, order), or nullopt for
  /// non-members. Stable for a given chain.
  std::optional<std::uint64_t> index_of(const Permutation& g) const;
  Permutation element_at(std::uint64_t index) const;

  /// Visits every element once, in index order.
  void for_each_element(const std::function<void(const Permutation&)>& visit) const;

  /// Uniformly random element, built from uniformly random transversal picks.
  Permutation random_element(std::mt19937_64& rng) const;

  /// Union of all levels' generators, without duplicates.
  std::vector<Permutation> strong_generators() const;

 private:
  std::size_t degree_ = 0;
  std::vector<ChainLevel> levels_;
  std::vector<std::uint64_t> strides_;

  friend class ChainBuilder;
  void finalize();
};

}  // namespace fprlab
