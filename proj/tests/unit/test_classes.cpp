#include <doctest.h>

#include <map>
#include <random>

#include "fprlab/actions.hpp"
#include "fprlab/classes.hpp"
#include "fprlab/classical.hpp"

using namespace fprlab;

namespace {

std::uint64_t choose(std::uint64_t n, std::uint64_t k) { return binomial(n, k); }

// Oracle: partition all elements by explicit conjugation with every element.
std::multiset<std::uint64_t> brute_force_class_sizes(const PermGroup& G) {
  auto elems = G.elements(2000);
  std::set<Permutation> unseen(elems.begin(), elems.end());
  std::multiset<std::uint64_t> sizes;
  while (!unseen.empty()) {
    const Permutation x = *unseen.begin();
    std::set<Permutation> cls;
    for (const auto& g : elems) cls.insert(x.conjugate_by(g));
    for (const auto& y : cls) unseen.erase(y);
    sizes.insert(cls.size());
  }
  return sizes;
}

std::vector<PermGroup> small_corpus() {
  std::vector<PermGroup> corpus{symmetric_group(3), symmetric_group(5), alternating_group(5),
                                alternating_group(6), dihedral_group(20), cyclic_group(12),
                                wreath_product_imprimitive(symmetric_group(3), symmetric_group(2)),
                                wreath_product_product_action(symmetric_group(3), symmetric_group(2))};
  corpus.push_back(act_on(build_classical(ClassicalKind::kPSL, 2, 7), {ActionKind::kProjective, 0, {}, {}}).group());
  corpus.push_back(act_on(build_classical(ClassicalKind::kGL, 2, 3), {ActionKind::kVectors, 0, {}, {}}).group());
  return corpus;
}

}  // namespace

TEST_CASE("Alt(5) class table") {
  auto t = ClassTable::build(alternating_group(5));
  REQUIRE(t.size() == 5);
  std::vector<int> sizes, orders;
  for (const auto& c : t.classes()) {
    sizes.push_back(static_cast<int>(c.size));
    orders.push_back(static_cast<int>(c.order));
    CHECK(c.size * c.centralizer_order == 60);
  }
  CHECK(sizes == std::vector<int>{1, 15, 20, 12, 12});
  CHECK(orders == std::vector<int>{1, 2, 3, 5, 5});
  CHECK(t.prime_order_indices() == std::vector<std::size_t>{1, 2, 3, 4});
  // Reps are lexicographically least.
  CHECK(t[1].rep.to_cycle_string() == "(2,3)(4,5)");
  CHECK(t[2].rep.to_cycle_string() == "(3,4,5)");
}

TEST_CASE("Sym(3) has three classes") { CHECK(ClassTable::build(symmetric_group(3)).size() == 3); }

TEST_CASE("class_of") {
  CHECK(class_of(symmetric_group(5), Permutation::from_cycles(5, "(1,2)")).size == 10);
  for (std::size_t n = 3; n <= 8; ++n) {
    auto cls = class_of(symmetric_group(n), Permutation::from_cycles(n, "(1,2,3)"));
    CHECK(cls.size == 2 * choose(n, 3));
    CHECK(cls.centralizer_order * cls.size == symmetric_group(n).order());
  }
  CHECK_THROWS_AS(class_of(alternating_group(5), Permutation::from_cycles(5, "(1,2)")), NotAMember);
}

TEST_CASE("fusion of 3-cycles into Sym(n-2) x Sym(2)") {
  for (std::size_t n = 5; n <= 9; ++n) {
    auto G = symmetric_group(n);
    // Stabilizer of {n-1, n}.
    std::vector<Permutation> gens;
    gens.push_back(Permutation::from_cycle_list(n, {{0, 1}}));
    std::vector<Point> cycle;
    for (Point a = 0; a + 2 < n; ++a) cycle.push_back(a);
    gens.push_back(Permutation::from_cycle_list(n, {cycle}));
    gens.push_back(Permutation::from_cycle_list(n, {{static_cast<Point>(n - 2), static_cast<Point>(n - 1)}}));
    PermGroup H(n, gens);
    auto C = class_of(G, Permutation::from_cycles(n, "(1,2,3)"));
    CHECK(fusion_count(G, H, C) == 2 * choose(n - 2, 3));
  }
  PermGroup not_sub(5, {Permutation::from_cycles(5, "(1,2)")});
  CHECK_THROWS_AS(fusion_count(alternating_group(5), not_sub, class_of(alternating_group(5), Permutation(5))),
                  InvalidArgument);
}

TEST_CASE("fusion_counts agrees with fusion_count") {
  auto G = alternating_group(6);
  auto t = ClassTable::build(G);
  auto H = G.point_stabilizer(0);
  auto counts = fusion_counts(t, H);
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    CHECK(counts[i] == fusion_count(G, H, t[i]));
    total += counts[i];
  }
  CHECK(total == 60);
}

TEST_CASE("property: class sizes sum to |G| and match brute force") {
  for (const auto& G : small_corpus()) {
    auto t = ClassTable::build(G);
    BigInt sum = 0;
    std::multiset<std::uint64_t> sizes;
    for (const auto& c : t.classes()) {
      sum += c.size;
      sizes.insert(static_cast<std::uint64_t>(c.size));
      CHECK(G.order() % c.size == 0);
      CHECK(c.size * c.centralizer_order == G.order());
    }
    CHECK(sum == G.order());
    if (G.order() <= 2000) CHECK(sizes == brute_force_class_sizes(G));
  }
}

TEST_CASE("property: cycle type and power maps") {
  std::mt19937_64 rng(17);
  for (const auto& G : small_corpus()) {
    auto t = ClassTable::build(G);
    for (int s = 0; s < 30; ++s) {
      auto x = G.random_element(rng);
      const auto& c = t[t.class_index(x)];
      CHECK(x.cycle_type() == c.rep.cycle_type());
      CHECK(x.order() == c.order);
      for (std::uint64_t m = 1; m <= x.order(); ++m) {
        const auto& cm = t[t.class_index(x.pow(static_cast<long long>(m)))];
        CHECK(G.order() % cm.size == 0);
        CHECK(cm.order == x.order() / std::gcd(x.order(), m));
      }
    }
  }
}

TEST_CASE("order cap") {
  ClassOptions options;
  options.order_cap = 100;
  CHECK_THROWS_AS(ClassTable::build(symmetric_group(5), options), CapExceeded);
}
