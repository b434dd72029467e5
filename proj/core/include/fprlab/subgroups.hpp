#pragma once

#include <cstdint>
#include <vector>

#include "fprlab/perm_group.hpp"

namespace fprlab {

struct SubgroupSearchOptions {
  /// Largest |G| for which the subgroup lattice above <y> is explored.
  std::uint64_t order_cap = 10'000;
};

/// Sorted chain indices (with respect to G's chain) of the elements of a
/// subgroup H <= G. Two subgroups are equal iff their fingerprints are.
std::vector<std::uint64_t> subgroup_fingerprint(const PermGroup& G, const PermGroup& H);

/// Every subgroup K with <y> <= K <= G (including G itself), sorted by
/// (order, fingerprint). Throws CapExceeded when |G| exceeds the cap and
/// NotAMember when y is not in G.
std::vector<PermGroup> subgroups_containing(const PermGroup& G, const Permutation& y,
                                            const SubgroupSearchOptions& options = {});

/// The maximal subgroups of G that contain y, i.e. the maximal elements of
/// the poset of proper subgroups containing <y>. Empty when <y> = G.
std::vector<PermGroup> maximal_overgroups(const PermGroup& G, const Permutation& y,
                                          const SubgroupSearchOptions& options = {});

/// Variant that trusts caller-supplied candidates: returns those candidates
/// that are proper subgroups of G containing y and are maximal among the
/// supplied ones. No lattice search is done, so no order cap applies.
std::vector<PermGroup> maximal_overgroups(const PermGroup& G, const Permutation& y,
                                          const std::vector<PermGroup>& candidates);

}  // namespace fprlab
