#pragma once

#include <memory>
#include <mutex>
#include <random>
#include <span>
#include <vector>

#include "fprlab/common.hpp"
#include "fprlab/permutation.hpp"
#include "fprlab/stabilizer_chain.hpp"

namespace fprlab {

/// Seed used when a caller does not supply one.
inline constexpr std::uint64_t kDefaultSeed = 20171001;

/// A permutation group given by generators. The stabilizer chain is built
/// on first use and shared, read-only, by copies of the group.
class PermGroup {
 public:
  PermGroup(std::size_t degree, std::vector<Permutation> generators, std::uint64_t seed = kDefaultSeed);

  static PermGroup trivial(std::size_t degree, std::uint64_t seed = kDefaultSeed);

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  std::uint64_t seed() const { return seed_; }

  const StabilizerChain& chain() const;

  BigInt order() const { return chain().order(); }
  std::uint64_t order_u64() const { return chain().order_u64(); }
  bool contains(const Permutation& g) const;
  bool is_trivial() const;

  std::vector<Point> orbit(Point alpha) const;
  /// Orbits in order of their least point; each orbit sorted.
  std::vector<std::vector<Point>> orbits() const;
  bool is_transitive() const;

  /// Throws NotTransitive for intransitive groups.
  bool is_primitive() const;

  PermGroup point_stabilizer(Point alpha) const;
  PermGroup pointwise_stabilizer(std::span<const Point> points) const;
  BigInt pointwise_stabilizer_order(std::span<const Point> points) const;

  bool is_subgroup_of(const PermGroup& other) const;

  /// Every element, in chain index order. Throws CapExceeded above `cap`.
  std::vector<Permutation> elements(std::uint64_t cap) const;

  Permutation random_element(std::mt19937_64& rng) const { return chain().random_element(rng); }

  /// Subgroup generated by these generators plus `extra`.
  PermGroup join(const Permutation& extra) const;

 private:
  struct ChainCache {
    std::once_flag once;
    std::unique_ptr<StabilizerChain> chain;
  };

  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::uint64_t seed_;
  std::shared_ptr<ChainCache> cache_;
};

/// Builds a chain for G with an explicit seed (the group's cached chain
/// uses the group's own seed).
StabilizerChain build_chain(const PermGroup& group, std::uint64_t seed);

PermGroup symmetric_group(std::size_t n);
PermGroup alternating_group(std::size_t n);
/// Regular cyclic group of order n acting on n points.
PermGroup cyclic_group(std::size_t n);
/// Dihedral group of the given order (2m) acting on m points.
PermGroup dihedral_group(std::size_t order);
/// inner wr outer in its imprimitive action on (inner degree) * (outer degree) points.
PermGroup wreath_product_imprimitive(const PermGroup& inner, const PermGroup& outer);
/// inner wr outer in its product action on (inner degree)^(outer degree) points.
PermGroup wreath_product_product_action(const PermGroup& inner, const PermGroup& outer);

}  // namespace fprlab
