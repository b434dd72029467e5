#include <doctest.h>

#include "fprlab/actions.hpp"
#include "fprlab/classical.hpp"
#include "fprlab/genus.hpp"
#include "fprlab/rng.hpp"

using namespace fprlab;

namespace {

PermGroup psl2_23() {
  return act_on(build_classical(ClassicalKind::kPSL, 2, 23), {ActionKind::kProjective, 0, {}, {}}).group();
}

Permutation cycle_of(std::size_t n, std::vector<Point> points) { return Permutation::from_cycle_list(n, {points}); }

Permutation long_cycle(std::size_t n) {
  std::vector<Point> pts(n);
  for (Point a = 0; a < n; ++a) pts[a] = a;
  return cycle_of(n, pts);
}

}  // namespace

TEST_CASE("ind") {
  CHECK(ind(Permutation::from_cycles(5, "(1,2)")) == 1);
  for (std::size_t n = 2; n <= 9; ++n) CHECK(ind(long_cycle(n)) == n - 1);
  CHECK(ind(Permutation(7)) == 0);
  CHECK_THROWS_AS(ind(Permutation(4), 5), DegreeMismatch);

  auto G = psl2_23();
  REQUIRE(G.degree() == 24);
  auto t = ClassTable::build(G);
  for (const auto& c : t.classes())
    if (c.order == 2) CHECK(ind(c.rep) == 12);
}

TEST_CASE("min_index_table") {
  auto table = min_index_table(ClassTable::build(psl2_23()));
  CHECK(table == std::map<std::uint64_t, std::uint64_t>{{2, 12}, {3, 16}, {4, 18}, {6, 20}, {11, 20}, {12, 22}, {23, 22}});
  for (std::size_t n = 3; n <= 7; ++n) CHECK(min_index_table(ClassTable::build(symmetric_group(n))).at(2) == 1);
  auto regular = min_index_table(ClassTable::build(cyclic_group(12)));
  for (const auto& [d, m] : regular) CHECK(m == 12 - 12 / d);
}

TEST_CASE("genus_of: genus-zero families") {
  for (std::size_t n = 2; n <= 12; ++n) {
    auto G = cyclic_group(n);
    auto g = G.generators()[0];
    CHECK(genus_of(G, {g, g.inverse()}).genus == 0);
  }
  for (std::size_t n = 3; n <= 7; ++n) {
    auto x1 = cycle_of(n, {0, 1});
    auto x2 = long_cycle(n);
    auto r = genus_of(symmetric_group(n), {x1, x2, (x1 * x2).inverse()});
    CHECK(r.genus == 0);
    CHECK(r.indices == std::vector<std::uint64_t>{1, n - 1, n - 2});
  }
  for (std::size_t n = 5; n <= 7; n += 2) {
    // (1,2,3) and (3,...,n): indices 2, n-3 and n-1. With (1,...,n) in
    // place of (3,...,n) the product is an n-cycle and the genus is 1.
    std::vector<Point> tail;
    for (Point a = 2; a < n; ++a) tail.push_back(a);
    auto x1 = cycle_of(n, {0, 1, 2});
    auto x2 = cycle_of(n, tail);
    CHECK(genus_of(alternating_group(n), {x1, x2, (x1 * x2).inverse()}).genus == 0);
    CHECK(genus_of(alternating_group(n), {x1, long_cycle(n), (x1 * long_cycle(n)).inverse()}).genus == 1);
  }
  for (std::size_t n = 4; n <= 6; n += 2) {
    // (1,2,3) and (2,...,n): indices 2, n-2 and n-2.
    std::vector<Point> tail;
    for (Point a = 1; a < n; ++a) tail.push_back(a);
    auto x1 = cycle_of(n, {0, 1, 2});
    auto x2 = cycle_of(n, tail);
    CHECK(genus_of(alternating_group(n), {x1, x2, (x1 * x2).inverse()}).genus == 0);
  }
}

TEST_CASE("genus_of errors") {
  auto S5 = symmetric_group(5);
  auto t = Permutation::from_cycles(5, "(1,2)");
  CHECK_THROWS_AS(genus_of(S5, {t}), InvalidArgument);
  CHECK_THROWS_AS(genus_of(S5, {t, t}), IntransitiveTuple);
  auto c = long_cycle(5);
  CHECK_THROWS_AS(genus_of(S5, {c, c.inverse()}), InvalidArgument);
  CHECK_THROWS_AS(genus_of(alternating_group(5), {t, t}), NotAMember);
  CHECK_THROWS_AS(genus_of(S5, {}), InvalidArgument);
}

TEST_CASE("genus screen of PSL(2,23) on 24 points") {
  GenusScreenOptions options;
  options.insoluble_filter = true;
  auto screen = genus_screen(psl2_23(), 0, options);
  CHECK(screen.target == 46);
  CHECK(screen.survivors().empty());
  CHECK(screen.refuted_by_index > 0);
  for (const auto& s : screen.signatures) {
    CHECK(s.status == SignatureStatus::kRefutedBy85Over42);
    CHECK(s.angle_sum < Rational(85, 42));
    CHECK(s.min_index_sum <= 46);
  }
  // Without the filter the same signatures survive and the witness search
  // has to settle them.
  options.insoluble_filter = false;
  auto unfiltered = genus_screen(psl2_23(), 0, options);
  CHECK(unfiltered.survivors().size() == screen.signatures.size());
  for (const auto* s : unfiltered.survivors()) CHECK(s->status != SignatureStatus::kRealized);
}

TEST_CASE("genus screen realizes known signatures") {
  auto s5 = genus_screen(symmetric_group(5), 0);
  const Signature* found = nullptr;
  for (const auto* s : s5.survivors())
    if (s->orders == std::vector<std::uint64_t>{2, 4, 5}) found = s;
  REQUIRE(found);
  CHECK(found->status == SignatureStatus::kRealized);
  REQUIRE(found->witness);
  CHECK(genus_of(symmetric_group(5), found->witness->elements).genus == 0);

  auto c6 = genus_screen(cyclic_group(6), 0);
  bool realized66 = false;
  for (const auto* s : c6.survivors())
    if (s->orders == std::vector<std::uint64_t>{6, 6} && s->status == SignatureStatus::kRealized) realized66 = true;
  CHECK(realized66);
}

TEST_CASE("property: screen soundness") {
  for (const auto& G : {symmetric_group(4), alternating_group(5), cyclic_group(6), dihedral_group(10)}) {
    for (std::int64_t g : {0, 1}) {
      GenusScreenOptions options;
      options.max_k = 5;
      auto screen = genus_screen(G, g, options);
      for (const auto& s : screen.signatures) {
        CHECK(s.min_index_sum <= screen.target);
        if (s.status == SignatureStatus::kRealized) {
          REQUIRE(s.witness);
          CHECK(genus_of(G, s.witness->elements).genus == g);
          std::vector<std::uint64_t> orders;
          for (const auto& x : s.witness->elements) orders.push_back(x.order());
          CHECK(orders == s.orders);
        }
      }
      // Brute-force recount of multisets violating the index condition.
      std::vector<std::uint64_t> mins;
      for (const auto& [d, m] : screen.min_index) mins.push_back(m);
      std::uint64_t refuted = 0;
      std::vector<std::size_t> pick;
      auto rec = [&](auto&& self, std::size_t k, std::size_t start, std::uint64_t sum) -> void {
        if (pick.size() == k) {
          if (sum > screen.target) ++refuted;
          return;
        }
        for (std::size_t i = start; i < mins.size(); ++i) {
          pick.push_back(i);
          self(self, k, i, sum + mins[i]);
          pick.pop_back();
        }
      };
      for (std::size_t k = 2; k <= 5; ++k) rec(rec, k, 0, 0);
      CHECK(refuted == screen.refuted_by_index);
    }
  }
}

TEST_CASE("orbit counting identity") {
  CHECK(orbit_count_identity_check(Permutation(6)));
  CHECK(orbit_count_identity_check(long_cycle(5)));
  for (const auto& G : {symmetric_group(5), alternating_group(6), psl2_23()}) {
    auto rng = make_rng(kDefaultSeed, Stream::kTuples, G.degree());
    for (int i = 0; i < 200; ++i) CHECK(orbit_count_identity_check(G.random_element(rng)));
  }
}

TEST_CASE("property: parity and subadditivity of the index") {
  for (const auto& G : {symmetric_group(6), alternating_group(7), psl2_23(), cyclic_group(9)}) {
    auto rng = make_rng(kDefaultSeed, Stream::kTuples, 1);
    for (int i = 0; i < 2500; ++i) {
      const std::size_t k = 2 + uniform_below(rng, 5);
      const auto tuple = random_product_one_tuple(G, k, rng);
      std::uint64_t sum = 0;
      for (const auto& x : tuple) sum += ind(x);
      CHECK(sum % 2 == 0);
      CHECK(ind(tuple[0] * tuple[1]) <= ind(tuple[0]) + ind(tuple[1]));
    }
  }
}
