#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "fprlab/classes.hpp"
#include "fprlab/perm_group.hpp"

namespace fprlab {

/// Raised by genus_of for tuples whose group is not transitive on the
/// domain; kept distinct from NotTransitive so callers can tell misuse of
/// the genus formula apart from other intransitivity errors.
class IntransitiveTuple : public Error {
 public:
  using Error::Error;
};

/// n minus the number of cycles of x (fixed points count as cycles).
std::uint64_t ind(const Permutation& x);
/// As above, checking that x has degree n.
std::uint64_t ind(const Permutation& x, std::size_t n);

struct GenTuple {
  std::vector<Permutation> elements;
  std::vector<std::uint64_t> indices;
  std::int64_t genus = 0;
};

/// Genus g with sum ind(x_i) = 2(n + g - 1). The tuple must have product 1
/// and generate G, which must be transitive. Throws InvalidArgument for a
/// wrong product, a non-generating tuple, or an odd index sum;
/// IntransitiveTuple when G is intransitive; NotAMember for elements
/// outside G.
GenTuple genus_of(const PermGroup& G, const std::vector<Permutation>& tuple);

/// Minimal ind over the elements of each non-identity order.
std::map<std::uint64_t, std::uint64_t> min_index_table(const ClassTable& table);

enum class SignatureStatus {
  kRefutedBy85Over42,
  kRealized,
  /// Exhaustive witness search found no tuple.
  kRefutedBySearch,
  /// Witness search ran out of budget.
  kUndecided,
};

std::string to_string(SignatureStatus status);

struct Signature {
  /// Element orders d_1 <= ... <= d_k.
  std::vector<std::uint64_t> orders;
  std::uint64_t min_index_sum = 0;
  /// sum (d_i - 1) / d_i.
  Rational angle_sum;
  SignatureStatus status = SignatureStatus::kUndecided;
  std::optional<GenTuple> witness;
  std::uint64_t nodes = 0;
};

struct GenusScreenOptions {
  std::uint64_t max_k = 8;
  /// Apply sum (d_i - 1)/d_i >= 85/42. Only sound when the caller knows G
  /// is insoluble and not Alt(5).
  bool insoluble_filter = false;
  /// Skip the witness search entirely.
  bool search_witnesses = true;
  /// Node budget per signature.
  std::uint64_t witness_budget = 1'000'000;
  ClassOptions classes;
};

struct GenusScreen {
  std::size_t degree = 0;
  std::int64_t genus = 0;
  /// 2(n + g - 1).
  std::uint64_t target = 0;
  std::map<std::uint64_t, std::uint64_t> min_index;
  /// Order multisets (2 <= k <= max_k) with sum of minimal indices above
  /// the target.
  std::uint64_t refuted_by_index = 0;
  /// Every multiset passing the index condition, in (k, orders) order.
  std::vector<Signature> signatures;

  /// Signatures passing all necessary conditions (the index condition and,
  /// when enabled, the 85/42 filter).
  std::vector<const Signature*> survivors() const;
};

/// Screens order signatures of generating product-one tuples of genus g.
/// Witnesses put the orders in sorted position; braid moves make any
/// ordering of a signature equivalent, so this loses nothing.
GenusScreen genus_screen(const PermGroup& G, std::int64_t g, const GenusScreenOptions& options = {});

/// orb(x) = (n/d) * sum over y in <x> of fpr(y), with d = |x|: true iff
/// the number of cycles of x matches the average number of fixed points.
bool orbit_count_identity_check(const Permutation& x);

/// k uniformly random elements of G, the last replaced by the inverse of
/// the product of the others.
std::vector<Permutation> random_product_one_tuple(const PermGroup& G, std::size_t k, std::mt19937_64& rng);

}  // namespace fprlab
