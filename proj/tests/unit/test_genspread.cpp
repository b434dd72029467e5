#include <doctest.h>

#include <chrono>

#include "fprlab/actions.hpp"
#include "fprlab/classical.hpp"
#include "fprlab/genspread.hpp"

using namespace fprlab;

namespace {

PermGroup psl2(std::uint32_t q) {
  return act_on(build_classical(ClassicalKind::kPSL, 2, q), {ActionKind::kProjective, 0, {}, {}}).group();
}

// Oracle: P(G,2) by testing every ordered pair with stabilizer chains.
Rational brute_force_prob(const PermGroup& G) {
  const auto elems = G.elements(200);
  std::uint64_t hits = 0;
  for (const auto& x : elems)
    for (const auto& y : elems)
      if (generates(G, x, y)) ++hits;
  return Rational(BigInt(hits), BigInt(elems.size() * elems.size()));
}

// No y in G generates G together with every x in the tuple.
bool tuple_defeats(const PermGroup& G, const std::vector<Permutation>& xs, const std::vector<Permutation>& ys) {
  for (const auto& y : ys) {
    bool all = true;
    for (const auto& x : xs)
      if (!generates(G, x, y)) {
        all = false;
        break;
      }
    if (all) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("generates") {
  for (std::size_t n = 3; n <= 8; ++n) {
    std::vector<Point> cycle(n);
    for (Point a = 0; a < n; ++a) cycle[a] = a;
    CHECK(generates(symmetric_group(n), Permutation::from_cycle_list(n, {{0, 1}}), Permutation::from_cycle_list(n, {cycle})));
  }
  for (std::size_t n = 5; n <= 9; n += 2) {
    std::vector<Point> cycle(n);
    for (Point a = 0; a < n; ++a) cycle[a] = a;
    CHECK(generates(alternating_group(n), Permutation::from_cycle_list(n, {{0, 1, 2}}),
                    Permutation::from_cycle_list(n, {cycle})));
  }
  auto x = Permutation::from_cycles(5, "(1,2,3,4,5)");
  CHECK_FALSE(generates(alternating_group(5), x, x));
  CHECK_THROWS_AS(generates(alternating_group(5), x, Permutation::from_cycles(5, "(1,2)")), NotAMember);
}

TEST_CASE("Cayley table agrees with permutation arithmetic") {
  auto G = symmetric_group(4);
  auto t = CayleyTable::build(G);
  REQUIRE(t.size() == 24);
  CHECK(t.element(0).is_identity());
  for (std::uint32_t a = 0; a < 24; ++a) {
    CHECK(t.mul(a, t.inv(a)) == 0);
    for (std::uint32_t b = 0; b < 24; ++b) {
      CHECK(t.element(t.mul(a, b)) == t.element(a) * t.element(b));
      CHECK(t.generates(a, b) == generates(G, t.element(a), t.element(b)));
    }
  }
  CHECK_THROWS_AS(CayleyTable::build(symmetric_group(5), 100), CapExceeded);
}

TEST_CASE("P(G,2) exact values") {
  CHECK(prob_gen2(alternating_group(6)).value == Rational(53, 90));
  CHECK(prob_gen2(alternating_group(5)).value == Rational(19, 30));
  // C_p: pairs not both in the trivial subgroup... i.e. not both the identity.
  for (std::size_t p : {5, 7}) {
    const long long pp = static_cast<long long>(p);
    CHECK(prob_gen2(cyclic_group(p)).value == 1 - Rational(1, pp * pp));
    CHECK(prob_gen2(cyclic_group(p)).value == brute_force_prob(cyclic_group(p)));
  }
  for (const auto& G : {symmetric_group(4), dihedral_group(10), alternating_group(4), cyclic_group(6)})
    CHECK(prob_gen2(G).value == brute_force_prob(G));
}

TEST_CASE("P(G,2) estimate beyond the cap") {
  GraphOptions options;
  options.order_cap = 100;
  CHECK_THROWS_AS(prob_gen2(alternating_group(6), options), CapExceeded);
  auto est = prob_gen2(alternating_group(6), options, 2000);
  CHECK_FALSE(est.exact);
  CHECK(std::abs(static_cast<double>(est.value) - 53.0 / 90.0) < 5 * est.std_error + 1e-9);
  CHECK(est.value == prob_gen2(alternating_group(6), options, 2000).value);
}

TEST_CASE("generating graph of Alt(5)") {
  auto graph = build_graph(alternating_group(5));
  CHECK(graph.vertex_count() == 59);
  CHECK(graph.edge_count() == 1140);
  CHECK(prob_gen2(graph) == Rational(19, 30));
  auto stats = graph_stats(graph);
  CHECK(stats.connected);
  CHECK(stats.diameter == 2u);
  CHECK(stats.clique.exact());
  CHECK(stats.clique.lower == 8);
  CHECK(stats.coclique.exact());
  CHECK(stats.coclique.lower == 15);
  // Degrees by class, against chain-based generation tests.
  const auto G = alternating_group(5);
  const auto all = G.elements(60);
  for (std::uint32_t r : graph.class_rep_vertices()) {
    std::uint64_t oracle = 0;
    for (const auto& y : all)
      if (generates(G, graph.vertex_element(r), y)) ++oracle;
    CHECK(graph.degree(r) == oracle);
  }
  // Regression value: the smallest degree is 24 (the involutions), and
  // the sorted sequence meets the criterion.
  CHECK(stats.degree_sequence.front() == 24);
  CHECK(posa_check(graph));
}

TEST_CASE("clique and coclique report bounds under a tiny budget") {
  auto stats = graph_stats(build_graph(alternating_group(5)), 4);
  CHECK(stats.clique.lower <= 8);
  CHECK(stats.clique.upper >= 8);
  CHECK(stats.coclique.lower <= 15);
  CHECK(stats.coclique.upper >= 15);
}

TEST_CASE("chromatic number of the Alt(5) generating graph") {
  auto b = chromatic_number(build_graph(alternating_group(5)));
  CHECK(b.exact());
  CHECK(b.lower == 9);
}

TEST_CASE("posa_check") {
  CHECK(posa_check({4, 4, 4, 4, 4}));
  CHECK_FALSE(posa_check({1, 1, 1, 1, 4}));
  CHECK(posa_check(std::vector<std::uint64_t>{}));
}

TEST_CASE("property: graph symmetry, loops, class-invariant degrees") {
  for (const auto& G : {alternating_group(5), symmetric_group(4), psl2(7), dihedral_group(12)}) {
    auto graph = build_graph(G);
    CHECK(graph.vertex_count() + 1 == G.order());
    for (std::uint32_t u = 0; u < graph.vertex_count(); ++u) {
      CHECK_FALSE(graph.adjacent(u, u));
      for (std::uint32_t v = 0; v < u; ++v) CHECK(graph.adjacent(u, v) == graph.adjacent(v, u));
    }
    std::map<std::size_t, std::uint64_t> degree_of_class;
    for (std::uint32_t v = 0; v < graph.vertex_count(); ++v) {
      auto [it, fresh] = degree_of_class.emplace(graph.vertex_class(v), graph.degree(v));
      if (!fresh) CHECK(it->second == graph.degree(v));
    }
    CHECK(prob_gen2(graph) == prob_gen2(G).value);
  }
}

TEST_CASE("P(G,2) >= 53/90 for the small simple groups") {
  const auto start = std::chrono::steady_clock::now();
  std::vector<PermGroup> simple{alternating_group(5), alternating_group(6), psl2(7), psl2(8), psl2(11), psl2(13)};
  std::vector<std::uint64_t> orders;
  for (const auto& G : simple) {
    orders.push_back(G.order_u64());
    CHECK(prob_gen2(G).value >= Rational(53, 90));
  }
  CHECK(orders == std::vector<std::uint64_t>{60, 360, 168, 504, 660, 1092});
  MESSAGE("seconds: " << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
}

TEST_CASE("spread of Alt(5), Alt(6), PSL(2,4)") {
  for (const auto& G : {alternating_group(5), alternating_group(6), psl2(4)}) {
    auto cert = spread_exact(G);
    REQUIRE(cert.s);
    REQUIRE(cert.u);
    CHECK(*cert.s == 2);
    CHECK(*cert.u == 2);
    const auto all = G.elements(1000);
    REQUIRE(cert.s_failing.size() == 3);
    CHECK(tuple_defeats(G, cert.s_failing, all));
    for (const auto& cc : cert.class_covers) {
      REQUIRE(cc.size);
      CHECK(*cc.size <= *cert.u + 1);
      std::vector<Permutation> members;
      for (const auto& g : all)
        if (g.cycle_type() == cc.rep.cycle_type() && class_of(G, g).rep == class_of(G, cc.rep).rep) members.push_back(g);
      CHECK(tuple_defeats(G, cc.cover, members));
    }
  }
}

TEST_CASE("property: u <= s and failing tuples are genuine") {
  for (const auto& G : {symmetric_group(4), psl2(7), dihedral_group(10), alternating_group(4)}) {
    auto cert = spread_exact(G);
    if (cert.s && cert.u) CHECK(*cert.u <= *cert.s);
    if (cert.s) CHECK(tuple_defeats(G, cert.s_failing, G.elements(1000)));
  }
  // Cyclic groups have infinite spread.
  auto cyc = spread_exact(cyclic_group(7));
  CHECK_FALSE(cyc.s);
  CHECK_FALSE(cyc.u);
  SpreadOptions tight;
  tight.order_cap = 50;
  CHECK_THROWS_AS(spread_exact(alternating_group(5), tight), CapExceeded);
}

TEST_CASE("uniform spread certificate for Alt(5)") {
  auto y = Permutation::from_cycles(5, "(1,2,3,4,5)");
  auto cert = uspread_certify(alternating_group(5), y, 2);
  REQUIRE(cert.overgroup_orders.size() == 1);
  CHECK(cert.overgroup_orders[0] == 10);
  std::vector<Rational> totals;
  for (const auto& row : cert.rows) totals.push_back(row.total);
  CHECK(totals == std::vector<Rational>{Rational(1, 3), 0, Rational(1, 6), Rational(1, 6)});
  CHECK(cert.max_total == Rational(1, 3));
  CHECK(cert.certified);
  CHECK_FALSE(cert.trust_note);
  CHECK_FALSE(uspread_certify(alternating_group(5), y, 3).certified);
  // Soundness against the exact value.
  CHECK(*spread_exact(alternating_group(5)).u >= 2);
}

TEST_CASE("uniform spread certificate for Alt(8)") {
  auto y = Permutation::from_cycles(8, "(1,2,3)(4,5,6,7,8)");
  auto cert = uspread_certify(alternating_group(8), y, 3);
  REQUIRE(cert.overgroup_orders.size() == 1);
  CHECK(cert.overgroup_orders[0] == 360);
  CHECK(cert.max_total < Rational(1, 3));
  CHECK(cert.certified);
}

TEST_CASE("uniform spread certificate: supplied and vacuous overgroups") {
  auto y = Permutation::from_cycles(5, "(1,2,3,4,5)");
  PermGroup d10(5, parse_permutation_list(5, "(1,2,3,4,5),(2,5)(3,4)"));
  auto cert = uspread_certify(alternating_group(5), y, 2, std::vector<PermGroup>{d10});
  CHECK(cert.certified);
  CHECK(cert.trust_note);
  CHECK(cert.max_total == Rational(1, 3));

  auto c7 = cyclic_group(7);
  auto vac = uspread_certify(c7, c7.generators()[0], 1000);
  CHECK(vac.vacuous);
  CHECK(vac.certified);

  USpreadOptions small;
  small.overgroup_cap = 100;
  CHECK_THROWS_AS(uspread_certify(alternating_group(6), Permutation::from_cycles(6, "(1,2,3,4,5)"), 2, std::nullopt, small),
                  CapExceeded);
  CHECK_THROWS_AS(uspread_certify(alternating_group(5), y, 0), InvalidArgument);
}

TEST_CASE("stretch: spread of Sym(6)") {
  SpreadOptions options;
  options.order_cap = 720;
  auto cert = spread_exact(symmetric_group(6), options);
  REQUIRE(cert.s);
  REQUIRE(cert.u);
  CHECK(*cert.s == 2);
  CHECK(*cert.u == 0);
}
