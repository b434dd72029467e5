#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "fprlab/perm_group.hpp"

namespace fprlab {

enum class ActionKind {
  kNatural,
  kKSets,
  kOrderedTuples,
  kCosets,
  kProduct,
  kProjective,
  kVectors,
  kSubspaces,
  kQuadraticForms,
};

std::string to_string(ActionKind kind);

/// A recipe for turning a group into a permutation action.
struct ActionSpec {
  ActionKind kind = ActionKind::kNatural;
  /// Set size for k-sets, tuple length for ordered tuples, subspace
  /// dimension for k-subspaces.
  std::size_t k = 0;
  /// Generators of the subgroup H for the coset action on H\G.
  std::vector<Permutation> subgroup_generators;
  /// "minus" or "plus" for quadratic-form actions.
  std::string form_type;
};

struct RealizeOptions {
  std::uint64_t degree_cap = 1'000'000;
  /// Reject realized actions that are not transitive.
  bool require_transitive = true;
};

/// A permutation group realized from a source permutation group acting on
/// some derived set Omega (k-sets, cosets, product tuples...).
class PermAction {
 public:
  const PermGroup& source() const { return source_; }
  const PermGroup& group() const { return group_; }
  std::size_t degree() const { return group_.degree(); }
  ActionKind kind() const { return kind_; }
  bool transitive() const { return transitive_; }

  /// 1-indexed human-readable name of a point of Omega.
  std::string label(Point omega) const;

  /// Image in the realized action of an element of the source group.
  Permutation induce(const Permutation& g) const;

  /// Index of the point with the given 0-indexed description (k-set or
  /// tuple), for tests and tools.
  Point point_index(const std::vector<Point>& description) const;

 private:
  friend PermAction realize(const PermGroup&, const ActionSpec&, const RealizeOptions&);
  friend PermAction realize_product_action(const PermGroup&, const PermGroup&, const RealizeOptions&);

  PermAction(PermGroup source, PermGroup group) : source_(std::move(source)), group_(std::move(group)) {}

  Permutation canonical_coset_rep(const Permutation& g) const;

  PermGroup source_;
  PermGroup group_;
  ActionKind kind_ = ActionKind::kNatural;
  bool transitive_ = true;
  std::size_t k_ = 0;
  // k-sets and tuples: descriptions indexed by point, plus reverse map.
  std::vector<std::vector<Point>> descriptions_;
  std::unordered_map<std::string, Point> index_;
  // Cosets: the subgroup and the canonical representative of each coset.
  std::shared_ptr<PermGroup> subgroup_;
  std::vector<Permutation> coset_reps_;
  std::unordered_map<Permutation, Point, PermutationHash> coset_index_;
  // Product action: inner degree and number of factors.
  std::size_t inner_degree_ = 0;
  std::size_t factors_ = 0;
};

/// Realizes natural, k-set, ordered-tuple, and coset actions of a
/// permutation group. Throws CapExceeded when the degree would exceed the
/// cap and NotTransitive for intransitive actions (unless allowed).
PermAction realize(const PermGroup& group, const ActionSpec& spec, const RealizeOptions& options = {});

/// inner wr outer in product action. The source group is the imprimitive
/// wreath product, so induce() accepts its elements.
PermAction realize_product_action(const PermGroup& inner, const PermGroup& outer, const RealizeOptions& options = {});

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace fprlab
