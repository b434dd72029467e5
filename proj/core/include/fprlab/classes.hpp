#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fprlab/perm_group.hpp"

namespace fprlab {

struct ConjClass {
  Permutation rep;
  std::uint64_t order = 1;  // element order
  BigInt size = 1;
  BigInt centralizer_order = 1;
  /// True when rep is the lexicographically least image sequence in the
  /// class (the class was fully enumerated); otherwise the first element
  /// found.
  bool canonical_rep = true;
};

struct ClassOptions {
  /// Largest |G| for a full class table.
  std::uint64_t order_cap = 10'000'000;
  /// Largest single class enumerated by class_of and fusion_count.
  std::uint64_t class_size_cap = 10'000'000;
  std::uint64_t seed = kDefaultSeed;
};

/// Every conjugacy class of G, sorted by (element order, size, rep), with a
/// per-element class index over G's chain indexing.
class ClassTable {
 public:
  /// Throws CapExceeded when |G| exceeds options.order_cap.
  static ClassTable build(const PermGroup& G, const ClassOptions& options = {});

  const PermGroup& group() const { return group_; }
  const std::vector<ConjClass>& classes() const { return classes_; }
  std::size_t size() const { return classes_.size(); }
  const ConjClass& operator[](std::size_t i) const { return classes_[i]; }
  /// Indices of the classes of prime element order.
  const std::vector<std::size_t>& prime_order_indices() const { return prime_order_; }

  /// Index of the class containing x. Throws NotAMember for x outside G.
  std::size_t class_index(const Permutation& x) const;
  std::size_t class_index_of_element(std::uint64_t chain_index) const { return class_id_[chain_index]; }

 private:
  explicit ClassTable(PermGroup group) : group_(std::move(group)) {}

  PermGroup group_;
  std::vector<ConjClass> classes_;
  std::vector<std::size_t> prime_order_;
  std::vector<std::uint32_t> class_id_;
};

/// A generating set of at most two elements when one is found among a few
/// seeded random pairs, else the group's own generators.
std::vector<Permutation> small_generating_set(const PermGroup& G, std::uint64_t seed = kDefaultSeed);

/// The conjugacy class of x by conjugation-orbit enumeration.
ConjClass class_of(const PermGroup& G, const Permutation& x, const ClassOptions& options = {});

/// All elements of x^G. Throws CapExceeded above options.class_size_cap.
std::vector<Permutation> class_elements(const PermGroup& G, const Permutation& x, const ClassOptions& options = {});

/// |x^G cap H| for the class C of G. Throws InvalidArgument unless H <= G.
std::uint64_t fusion_count(const PermGroup& G, const PermGroup& H, const ConjClass& C,
                           const ClassOptions& options = {});

/// |C_i cap H| for every class C_i of the table, in one pass over H.
std::vector<std::uint64_t> fusion_counts(const ClassTable& table, const PermGroup& H);

bool is_prime(std::uint64_t n);

}  // namespace fprlab
