#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "fprlab/actions.hpp"
#include "fprlab/perm_group.hpp"
#include "fprlab/rng.hpp"

using namespace fprlab;

TEST_CASE("compose applies the left factor first") {
  auto p = Permutation::from_cycles(3, "(1,2)");
  auto q = Permutation::from_cycles(3, "(2,3)");
  auto pq = compose(p, q);
  CHECK(pq.image(0) == 2);  // 1 -> 2 -> 3
  CHECK(pq.to_cycle_string() == "(1,3,2)");
  CHECK(pq == p * q);
}

TEST_CASE("fixed points and cycle data") {
  auto g = Permutation::from_cycles(6, "(1,2)(3,4,5)");
  CHECK(fixed_points(g) == std::vector<Point>{5});
  CHECK(g.order() == 6);
  CHECK(g.num_cycles() == 3);
  CHECK(g.cycle_type() == std::vector<std::size_t>{1, 2, 3});
  CHECK(Permutation(4).to_cycle_string() == "()");
  CHECK(Permutation::from_cycles(4, "()").is_identity());
}

TEST_CASE("malformed cycle text") {
  CHECK_THROWS_AS(Permutation::from_cycles(3, "(1,4)"), ParseError);
  CHECK_THROWS_AS(Permutation::from_cycles(3, "(1,2)(2,3)"), ParseError);
  CHECK_THROWS_AS(Permutation::from_cycles(3, "(1,2"), ParseError);
  CHECK_THROWS_AS(Permutation(std::vector<Point>{0, 0}), InvalidArgument);
}

TEST_CASE("permutation list parsing") {
  auto gens = parse_permutation_list(5, "(1,2,3,4,5),(1,2)(3,5)");
  REQUIRE(gens.size() == 2);
  CHECK(gens[0].order() == 5);
  CHECK(gens[1].order() == 2);
}

TEST_CASE("group orders") {
  CHECK(symmetric_group(5).order() == 120);
  CHECK(alternating_group(5).order() == 60);
  CHECK(alternating_group(6).order() == 360);
  CHECK(symmetric_group(10).order() == 3628800);
  CHECK(cyclic_group(7).order() == 7);
  CHECK(dihedral_group(10).order() == 10);
  CHECK(dihedral_group(4).order() == 4);
  auto w = wreath_product_imprimitive(symmetric_group(3), symmetric_group(2));
  CHECK(w.order() == 72);
  CHECK(w.degree() == 6);
  auto pw = wreath_product_product_action(symmetric_group(3), symmetric_group(2));
  CHECK(pw.order() == 72);
  CHECK(pw.degree() == 9);
  CHECK(pw.is_primitive());
}

TEST_CASE("orbits and transitivity") {
  PermGroup g(5, {Permutation::from_cycles(5, "(1,2)(3,4)")});
  auto orbits = g.orbits();
  REQUIRE(orbits.size() == 3);
  CHECK(orbits[0] == std::vector<Point>{0, 1});
  CHECK(orbits[1] == std::vector<Point>{2, 3});
  CHECK(orbits[2] == std::vector<Point>{4});
  CHECK_FALSE(g.is_transitive());
  CHECK_THROWS_AS(g.is_primitive(), NotTransitive);
}

TEST_CASE("primitivity") {
  CHECK(symmetric_group(6).is_primitive());
  CHECK(alternating_group(5).is_primitive());
  CHECK_FALSE(dihedral_group(12).is_primitive());
  CHECK(dihedral_group(10).is_primitive());
  CHECK_FALSE(wreath_product_imprimitive(symmetric_group(3), symmetric_group(2)).is_primitive());
}

TEST_CASE("stabilizers") {
  auto s6 = symmetric_group(6);
  CHECK(s6.point_stabilizer(2).order() == 120);
  const Point pts[] = {0, 4};
  CHECK(s6.pointwise_stabilizer(pts).order() == 24);
  CHECK(s6.pointwise_stabilizer_order(pts) == 24);
  auto stab = s6.point_stabilizer(3);
  for (const auto& g : stab.generators()) CHECK(g.image(3) == 3);
}

TEST_CASE("membership") {
  auto a5 = alternating_group(5);
  CHECK(a5.contains(Permutation::from_cycles(5, "(1,2,3)")));
  CHECK_FALSE(a5.contains(Permutation::from_cycles(5, "(1,2)")));
  CHECK_THROWS_AS(a5.contains(Permutation(4)), DegreeMismatch);
}

TEST_CASE("chain indexing is a bijection onto [0, |G|)") {
  auto g = symmetric_group(5);
  const auto& chain = g.chain();
  std::set<Permutation> seen;
  std::uint64_t expected = 0;
  chain.for_each_element([&](const Permutation& x) {
    CHECK(chain.index_of(x).value() == expected);
    CHECK(chain.element_at(expected) == x);
    ++expected;
    seen.insert(x);
  });
  CHECK(expected == 120);
  CHECK(seen.size() == 120);
}

TEST_CASE("property: random elements are members and orders divide |G|") {
  std::mt19937_64 rng(make_rng(7, Stream::kMonteCarlo, 0));
  for (auto g : {symmetric_group(7), alternating_group(8),
                 wreath_product_product_action(symmetric_group(4), symmetric_group(2))}) {
    const BigInt ord = g.order();
    for (int t = 0; t < 30; ++t) {
      auto x = g.random_element(rng);
      CHECK(g.contains(x));
      CHECK(ord % x.order() == 0);
      CHECK(x.pow(static_cast<long long>(x.order())).is_identity());
      CHECK((x * x.inverse()).is_identity());
    }
  }
}

TEST_CASE("property: orbit-stabilizer") {
  for (auto g : {symmetric_group(6), alternating_group(7), dihedral_group(14),
                 wreath_product_imprimitive(symmetric_group(3), cyclic_group(3))}) {
    for (Point a = 0; a < g.degree(); a += 2)
      CHECK(g.order() == g.point_stabilizer(a).order() * g.orbit(a).size());
  }
}

TEST_CASE("chains do not depend on the seed for their order") {
  auto a8 = alternating_group(8);
  for (std::uint64_t seed : {1ull, 2ull, 99ull}) {
    PermGroup g(8, a8.generators(), seed);
    CHECK(g.order() == 20160);
  }
}

TEST_CASE("k-set actions") {
  auto s10 = symmetric_group(10);
  ActionSpec spec{ActionKind::kKSets, 2, {}, {}};
  auto act = realize(s10, spec);
  CHECK(act.degree() == 45);
  CHECK(act.group().order() == 3628800);
  CHECK(act.group().is_primitive());
  CHECK(act.label(0) == "{1,2}");
  auto t = Permutation::from_cycles(10, "(1,2)");
  CHECK(act.induce(t).num_fixed_points() == 1 + 28);
}

TEST_CASE("coset actions") {
  auto a5 = alternating_group(5);
  ActionSpec spec{ActionKind::kCosets, 0, parse_permutation_list(5, "(1,2,3,4,5),(2,5)(3,4)"), {}};
  auto act = realize(a5, spec);
  CHECK(act.degree() == 6);
  CHECK(act.group().order() == 60);
  CHECK(act.group().is_primitive());
  // Homomorphism property.
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    auto x = a5.random_element(rng), y = a5.random_element(rng);
    CHECK(act.induce(x * y) == act.induce(x) * act.induce(y));
  }
}

TEST_CASE("degree caps") {
  auto s20 = symmetric_group(20);
  RealizeOptions options;
  options.degree_cap = 100;
  CHECK_THROWS_AS(realize(s20, ActionSpec{ActionKind::kKSets, 3, {}, {}}, options), CapExceeded);
}

TEST_CASE("product action agrees with the direct construction") {
  auto act = realize_product_action(symmetric_group(3), symmetric_group(2));
  CHECK(act.degree() == 9);
  CHECK(act.group().order() == 72);
  std::mt19937_64 rng(11);
  for (int t = 0; t < 20; ++t) {
    auto x = act.source().random_element(rng);
    CHECK(act.group().contains(act.induce(x)));
  }
}

#include "fprlab/subgroups.hpp"

TEST_CASE("overgroups of a 5-cycle in Alt(5)") {
  auto a5 = alternating_group(5);
  auto y = Permutation::from_cycles(5, "(1,2,3,4,5)");
  auto all = subgroups_containing(a5, y);
  REQUIRE(all.size() == 3);
  CHECK(all[0].order() == 5);
  CHECK(all[1].order() == 10);
  CHECK(all[2].order() == 60);
  auto maxes = maximal_overgroups(a5, y);
  REQUIRE(maxes.size() == 1);
  CHECK(maxes[0].order() == 10);
}

TEST_CASE("generators have no proper overgroups") {
  auto c7 = cyclic_group(7);
  CHECK(maximal_overgroups(c7, c7.generators()[0]).empty());
}

TEST_CASE("overgroups of a transposition in Sym(4)") {
  auto s4 = symmetric_group(4);
  auto maxes = maximal_overgroups(s4, Permutation::from_cycles(4, "(1,2)"));
  // Sym(3) twice (fixing 3 or 4) and the dihedral group of order 8.
  REQUIRE(maxes.size() == 3);
  std::vector<int> orders;
  for (auto& h : maxes) orders.push_back(static_cast<int>(h.order()));
  CHECK(orders == std::vector<int>{6, 6, 8});
}

TEST_CASE("supplied candidates") {
  auto a5 = alternating_group(5);
  auto y = Permutation::from_cycles(5, "(1,2,3,4,5)");
  PermGroup d10(5, parse_permutation_list(5, "(1,2,3,4,5),(2,5)(3,4)"));
  PermGroup c5(5, {y});
  PermGroup a4(5, parse_permutation_list(5, "(1,2,3),(2,3,4)"));
  auto maxes = maximal_overgroups(a5, y, std::vector<PermGroup>{c5, d10, a4});
  REQUIRE(maxes.size() == 1);
  CHECK(maxes[0].order() == 10);
}

TEST_CASE("order cap") {
  SubgroupSearchOptions options;
  options.order_cap = 100;
  CHECK_THROWS_AS(maximal_overgroups(symmetric_group(5), Permutation::from_cycles(5, "(1,2)"), options),
                  CapExceeded);
}
