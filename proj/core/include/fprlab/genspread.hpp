#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "fprlab/classes.hpp"
#include "fprlab/perm_group.hpp"

namespace fprlab {

using Bitset = boost::dynamic_bitset<std::uint64_t>;

/// true iff <x, y> = G. Throws NotAMember if x or y is not in G.
bool generates(const PermGroup& G, const Permutation& x, const Permutation& y);
/// true iff the elements generate G.
bool generates(const PermGroup& G, std::span<const Permutation> elements);

/// Full multiplication table of a small group. Elements are numbered by
/// G's stabilizer chain index, so index 0 is the identity and indices agree
/// with ClassTable.
class CayleyTable {
 public:
  /// Throws CapExceeded when |G| > cap.
  static CayleyTable build(const PermGroup& G, std::uint64_t cap = 2000);

  const PermGroup& group() const { return group_; }
  std::uint32_t size() const { return n_; }
  const Permutation& element(std::uint32_t i) const { return elements_[i]; }
  std::uint32_t index(const Permutation& g) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return table_[std::size_t(a) * n_ + b]; }
  std::uint32_t inv(std::uint32_t a) const { return inverse_[a]; }
  /// b^-1 a b.
  std::uint32_t conj(std::uint32_t a, std::uint32_t b) const { return mul(inverse_[b], mul(a, b)); }

  /// |<a, b>|, stopping early (and returning |G|) once more than half of G
  /// is reached.
  bool generates(std::uint32_t a, std::uint32_t b) const;
  /// Elements of <gens> as a bitset over indices.
  Bitset closure(std::span<const std::uint32_t> gens) const;

 private:
  explicit CayleyTable(PermGroup G) : group_(std::move(G)) {}

  PermGroup group_;
  std::uint32_t n_ = 0;
  std::vector<Permutation> elements_;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> inverse_;
  // Scratch space for generates().
  mutable std::vector<std::uint32_t> stamp_;
  mutable std::vector<std::uint32_t> queue_;
  mutable std::uint32_t epoch_ = 0;
};

struct GraphOptions {
  std::uint64_t order_cap = 2000;
  std::uint64_t seed = kDefaultSeed;
};

/// Vertices are the non-identity elements; vertex v is element v + 1 of the
/// Cayley table. x ~ y iff <x, y> = G.
class GeneratingGraph {
 public:
  const PermGroup& group() const { return table_->group(); }
  const CayleyTable& table() const { return *table_; }
  const ClassTable& classes() const { return *classes_; }

  std::uint32_t vertex_count() const { return static_cast<std::uint32_t>(adjacency_.size()); }
  std::uint64_t edge_count() const;
  const Bitset& neighbors(std::uint32_t v) const { return adjacency_[v]; }
  bool adjacent(std::uint32_t u, std::uint32_t v) const { return adjacency_[u][v]; }
  std::uint64_t degree(std::uint32_t v) const { return adjacency_[v].count(); }
  const Permutation& vertex_element(std::uint32_t v) const { return table_->element(v + 1); }
  /// Vertex of a class representative, one per non-identity class.
  const std::vector<std::uint32_t>& class_rep_vertices() const { return rep_vertices_; }
  /// Class-table index of the class containing vertex v.
  std::size_t vertex_class(std::uint32_t v) const { return classes_->class_index_of_element(v + 1); }

  /// Non-neighbourhood over all elements (identity included): bit i is set
  /// iff <x, element i> != G, where x is vertex v.
  Bitset non_generators(std::uint32_t v) const;

 private:
  friend GeneratingGraph build_graph(const PermGroup&, const GraphOptions&);

  std::shared_ptr<const CayleyTable> table_;
  std::shared_ptr<const ClassTable> classes_;
  std::vector<Bitset> adjacency_;
  std::vector<std::uint32_t> rep_vertices_;
};

/// Throws CapExceeded when |G| exceeds options.order_cap.
GeneratingGraph build_graph(const PermGroup& G, const GraphOptions& options = {});

struct ProbGen2 {
  Rational value;
  bool exact = true;
  /// Monte Carlo only.
  std::uint64_t samples = 0;
  double std_error = 0.0;
};

/// Probability that two uniformly random elements generate G. Exact up to
/// options.order_cap (by class representatives); otherwise throws
/// CapExceeded unless `estimate_samples` > 0, in which case a seeded Monte
/// Carlo estimate is returned.
ProbGen2 prob_gen2(const PermGroup& G, const GraphOptions& options = {}, std::uint64_t estimate_samples = 0);
/// 2 * edges / |G|^2.
Rational prob_gen2(const GeneratingGraph& graph);

/// A bound [lower, upper] on an integer invariant; exact when equal.
struct Bound {
  std::uint64_t lower = 0;
  std::uint64_t upper = 0;
  bool exact() const { return lower == upper; }
};

struct GraphStats {
  std::uint64_t vertices = 0;
  std::uint64_t edges = 0;
  /// Sorted ascending.
  std::vector<std::uint64_t> degree_sequence;
  bool connected = false;
  /// Unset when disconnected.
  std::optional<std::uint64_t> diameter;
  Bound clique;
  Bound coclique;
  /// Search nodes used by the clique and coclique searches.
  std::uint64_t nodes = 0;
};

/// Branch-and-bound searches share `node_budget`; when it runs out the
/// affected invariants are reported as bounds.
GraphStats graph_stats(const GeneratingGraph& graph, std::uint64_t node_budget = 2'000'000);

/// Chromatic number by DSatur branch and bound, bounded by `node_budget`.
Bound chromatic_number(const GeneratingGraph& graph, std::uint64_t node_budget = 20'000'000);

/// Posa's criterion on a degree sequence (any order): with d_1 <= ... <= d_m,
/// d_k >= k + 1 for every k < m / 2.
bool posa_check(std::vector<std::uint64_t> degrees);
bool posa_check(const GeneratingGraph& graph);

struct SpreadOptions {
  std::uint64_t order_cap = 600;
  /// Per set-cover instance; CapExceeded when exhausted.
  std::uint64_t node_budget = 50'000'000;
  std::uint64_t seed = kDefaultSeed;
  /// Solve the per-class instances for u(G) concurrently.
  bool parallel = true;
};

/// Minimum cover of one conjugacy class C by the sets {y in C : <x, y> != G}.
struct ClassCover {
  std::size_t class_index = 0;
  Permutation rep;
  /// Unset when no cover exists (some y in C generates G with every x).
  std::optional<std::uint64_t> size;
  /// The covering elements x_1, ..., x_size.
  std::vector<Permutation> cover;
};

struct SpreadCert {
  /// Unset means infinite (only for cyclic G).
  std::optional<std::uint64_t> s;
  std::optional<std::uint64_t> u;
  /// Class achieving u (the class of y in the definition).
  std::optional<std::size_t> witness_class;
  /// s + 1 non-identity elements with no common generating partner.
  std::vector<Permutation> s_failing;
  /// One entry per non-identity class; each cover has at most u + 1
  /// elements and defeats that class.
  std::vector<ClassCover> class_covers;
  std::string method = "set-cover exact";
  std::uint64_t nodes = 0;
};

/// Exact spread s(G) and uniform spread u(G) via minimum set cover with the
/// first set fixed up to conjugacy. Throws CapExceeded when |G| exceeds
/// options.order_cap or a search exceeds its node budget.
SpreadCert spread_exact(const PermGroup& G, const SpreadOptions& options = {});
SpreadCert spread_exact(const GeneratingGraph& graph, const SpreadOptions& options = {});

struct USpreadSummand {
  std::size_t overgroup = 0;
  Rational fpr;
};

struct USpreadRow {
  Permutation x;
  std::uint64_t order = 0;
  BigInt class_size = 0;
  std::vector<USpreadSummand> summands;
  Rational total;
};

struct USpreadCertificate {
  Permutation y;
  std::uint64_t k = 0;
  /// Orders of the maximal overgroups of y used, in the order summed.
  std::vector<BigInt> overgroup_orders;
  std::vector<std::vector<Permutation>> overgroup_generators;
  /// One row per class of prime order elements.
  std::vector<USpreadRow> rows;
  Rational max_total;
  /// max_total < 1/k: u(G) >= k with y^G as the witnessing class.
  bool certified = false;
  /// No maximal subgroup contains y, so the bound holds for every k.
  bool vacuous = false;
  /// Set when the overgroups were supplied rather than computed.
  std::optional<std::string> trust_note;
};

struct USpreadOptions {
  /// Largest |G| for which maximal overgroups are computed.
  std::uint64_t overgroup_cap = 100'000;
  ClassOptions classes;
};

/// Sum over maximal overgroups H of y of fpr(x, G/H), for every prime order
/// class representative x. With `overgroups` unset the maximal overgroups
/// are computed (CapExceeded above the cap); otherwise the supplied
/// subgroups are trusted to be the full list and the certificate says so.
USpreadCertificate uspread_certify(const PermGroup& G, const Permutation& y, std::uint64_t k,
                                   const std::optional<std::vector<PermGroup>>& overgroups = std::nullopt,
                                   const USpreadOptions& options = {});

}  // namespace fprlab
