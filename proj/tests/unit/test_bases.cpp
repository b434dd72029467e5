#include <doctest.h>

#include "fprlab/actions.hpp"
#include "fprlab/bases.hpp"
#include "fprlab/classical.hpp"
#include "fprlab/fpr.hpp"

using namespace fprlab;

namespace {

PermGroup a5_on_d10() {
  return realize(alternating_group(5), {ActionKind::kCosets, 0, parse_permutation_list(5, "(1,2,3,4,5),(2,5)(3,4)"), {}})
      .group();
}

PermGroup pgl33() {
  return act_on(build_classical(ClassicalKind::kPGL, 3, 3), {ActionKind::kProjective, 0, {}, {}}).group();
}

PermGroup gl23_vectors() {
  return act_on(build_classical(ClassicalKind::kGL, 2, 3), {ActionKind::kVectors, 0, {}, {}}).group();
}

// Oracle: is any k-subset of the domain a base?
bool some_subset_is_base(const PermGroup& G, std::size_t k) {
  const std::size_t n = G.degree();
  std::vector<Point> pick;
  auto rec = [&](auto&& self, Point start) -> bool {
    if (pick.size() == k) return is_base(G, pick);
    for (Point a = start; a < n; ++a) {
      pick.push_back(a);
      if (self(self, a + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  return rec(rec, 0);
}

std::vector<PermGroup> transitive_corpus() {
  return {symmetric_group(5),
          alternating_group(6),
          a5_on_d10(),
          pgl33(),
          dihedral_group(14),
          cyclic_group(7),
          realize(symmetric_group(6), {ActionKind::kKSets, 2, {}, {}}).group(),
          wreath_product_product_action(symmetric_group(3), symmetric_group(2)),
          wreath_product_imprimitive(symmetric_group(3), symmetric_group(2))};
}

}  // namespace

TEST_CASE("base sizes of symmetric and alternating groups") {
  for (std::size_t n = 3; n <= 8; ++n) {
    auto s = base_size_exact(symmetric_group(n));
    CHECK(s.exact());
    CHECK(s.upper == n - 1);
    CHECK(is_base(symmetric_group(n), s.witness));
    auto a = base_size_exact(alternating_group(n));
    CHECK(a.exact());
    CHECK(a.upper == n - 2);
  }
}

TEST_CASE("base sizes of linear groups") {
  auto gl = base_size_exact(gl23_vectors());
  CHECK(gl.exact());
  CHECK(gl.upper == 2);
  auto pgl = base_size_exact(pgl33());
  CHECK(pgl.exact());
  CHECK(pgl.upper == 4);
  CHECK_FALSE(some_subset_is_base(pgl33(), 3));
  CHECK(base_size_exact(PermGroup::trivial(4)).upper == 0);
}

TEST_CASE("property: witness validity and minimality") {
  for (const auto& G : transitive_corpus()) {
    auto r = base_size_exact(G);
    REQUIRE(r.exact());
    CHECK(r.witness.size() == r.upper);
    CHECK(is_base(G, r.witness));
    for (std::size_t skip = 0; skip < r.witness.size(); ++skip) {
      auto smaller = r.witness;
      smaller.erase(smaller.begin() + static_cast<long>(skip));
      CHECK_FALSE(is_base(G, smaller));
    }
    if (r.upper > 0 && G.degree() <= 15) CHECK_FALSE(some_subset_is_base(G, r.upper - 1));
  }
}

TEST_CASE("budget-cut base search reports bounds") {
  BaseOptions tiny;
  tiny.node_budget = 3;
  auto r = base_size_exact(symmetric_group(8), tiny);
  CHECK(r.lower <= 7);
  CHECK(r.upper >= 7);
  CHECK(is_base(symmetric_group(8), r.witness));
}

TEST_CASE("qhat") {
  auto table = ClassTable::build(a5_on_d10());
  CHECK(qhat(table, 2) == Rational(7, 3));
  CHECK(qhat(table, 3) == Rational(2, 3));
  CHECK(base_size_exact(a5_on_d10()).upper == 3);
  auto regular = ClassTable::build(cyclic_group(7));
  CHECK(qhat(regular, 1) == 0);
}

TEST_CASE("property: qhat certificates, monotonicity, bounds") {
  for (const auto& G : transitive_corpus()) {
    auto table = ClassTable::build(G);
    auto b = base_size_exact(G);
    REQUIRE(b.exact());
    for (std::uint64_t c = 1; c <= 6; ++c) {
      CHECK(qhat(table, c + 1) <= qhat(table, c));
      if (qhat(table, c) < 1) CHECK(b.upper <= c);
    }
    auto report = fpr_report(table);
    auto check = bounds_check(G, b.upper, report.mu);
    CHECK(check.sandwich_holds);
    CHECK(check.coupling_holds);
  }
}

TEST_CASE("random base probability") {
  auto S5 = symmetric_group(5);
  CHECK(exact_base_tuple_fraction(S5, 4) == Rational(24, 125));
  auto est = random_base_prob(S5, 4, 10000, 7);
  CHECK(est.trials == 10000);
  CHECK(std::abs(static_cast<double>(est.estimate) - 24.0 / 125.0) < 0.02);
  CHECK(random_base_prob(S5, 4, 10000, 7).bases == est.bases);
  CHECK(random_base_prob(S5, 3, 5000, 1).bases == 0);
  CHECK(random_base_prob(pgl33(), 3, 5000, 1).bases == 0);
  CHECK(random_base_prob(S5, 30, 100, 1).estimate <= 1);
  // Exhaustive and sampled agree on the coset action.
  auto G = a5_on_d10();
  auto exact = exact_base_tuple_fraction(G, 3);
  auto sampled = random_base_prob(G, 3, 20000, 3);
  CHECK(std::abs(static_cast<double>(sampled.estimate - exact)) < 0.02);
  CHECK_THROWS_AS(random_base_prob(S5, 4, 0), InvalidArgument);
}

TEST_CASE("bounds_check examples") {
  auto s5 = bounds_check(symmetric_group(5), 4, 2);
  CHECK(s5.sandwich_holds);
  CHECK(s5.coupling_holds);
  CHECK(s5.log_ratio <= 4);
  CHECK(s5.log2_order >= 4);
  auto coset = bounds_check(a5_on_d10(), 3, 4);
  CHECK(coset.coupling_holds);
  auto regular = bounds_check(cyclic_group(7), 1, 7);
  CHECK(regular.coupling_holds);
  CHECK(regular.sandwich_holds);
  CHECK_FALSE(bounds_check(symmetric_group(5), 2, 2).sandwich_holds);
}
