#include <doctest.h>

#include <chrono>
#include <random>

#include "fprlab/classical.hpp"

using namespace fprlab;

namespace {

FFMatrix random_matrix(FieldPtr F, std::size_t n, std::mt19937_64& rng) {
  FFMatrix m(F, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, static_cast<FieldElem>(rng() % F->q()));
  return m;
}

FFMatrix random_invertible(FieldPtr F, std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    auto m = random_matrix(F, n, rng);
    if (m.is_invertible()) return m;
  }
}

std::uint64_t gaussian_binomial(std::uint64_t n, std::uint64_t k, std::uint64_t q) {
  std::uint64_t num = 1, den = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    std::uint64_t a = 1, b = 1;
    for (std::uint64_t j = 0; j < n - i; ++j) a *= q;
    for (std::uint64_t j = 0; j < i + 1; ++j) b *= q;
    num *= a - 1;
    den *= b - 1;
  }
  return num / den;
}

}  // namespace

TEST_CASE("field axioms, exhaustively for q <= 16") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u}) {
    auto F = Field::get(q);
    CHECK(F->q() == q);
    for (FieldElem a = 0; a < q; ++a) {
      CHECK(F->add(a, 0) == a);
      CHECK(F->mul(a, 1) == a);
      CHECK(F->add(a, F->neg(a)) == 0);
      if (a) CHECK(F->mul(a, F->inv(a)) == 1);
      for (FieldElem b = 0; b < q; ++b) {
        CHECK(F->add(a, b) == F->add(b, a));
        CHECK(F->mul(a, b) == F->mul(b, a));
        for (FieldElem c = 0; c < q; c += 3) {
          CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
          CHECK(F->mul(a, F->mul(b, c)) == F->mul(F->mul(a, b), c));
          CHECK(F->add(a, F->add(b, c)) == F->add(F->add(a, b), c));
        }
      }
    }
    // The primitive element has order q - 1.
    CHECK(F->pow(F->primitive(), q - 1) == 1);
    for (std::uint32_t e = 1; e < q - 1; ++e) CHECK(F->pow(F->primitive(), e) != 1);
  }
  CHECK_THROWS_AS(Field::get(6), InvalidArgument);
  CHECK_THROWS_AS(Field::get(1), InvalidArgument);
}

TEST_CASE("moduli are irreducible") {
  for (std::uint32_t q : {4u, 8u, 9u, 16u, 25u, 27u, 32u, 64u, 81u, 128u}) {
    auto F = Field::get(q);
    auto P = Field::get(F->p());
    Poly m;
    for (auto c : F->modulus()) m.push_back(static_cast<FieldElem>(c));
    CHECK(poly::is_irreducible(*P, m));
  }
  // x^2 + 1 is the least irreducible quadratic over GF(3).
  CHECK(Field::get(9)->modulus() == std::vector<std::uint32_t>{1, 0, 1});
}

TEST_CASE("polynomial factorisation") {
  auto F = Field::get(2);
  // (t+1)^2 (t^2+t+1) = t^4 + t^3 + t + 1
  Poly f{1, 1, 0, 1, 1};
  auto factors = poly::distinct_irreducible_factors(*F, f);
  REQUIRE(factors.size() == 2);
  CHECK(factors[0] == Poly{1, 1});
  CHECK(factors[1] == Poly{1, 1, 1});
  // Products of random irreducibles factor back.
  std::mt19937_64 rng(5);
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 9u}) {
    auto G = Field::get(q);
    for (int t = 0; t < 20; ++t) {
      Poly g(1 + rng() % 6);
      for (auto& c : g) c = static_cast<FieldElem>(rng() % q);
      g.push_back(1);
      auto fs = poly::distinct_irreducible_factors(*G, g);
      Poly product{1};
      for (const auto& h : fs) {
        CHECK(poly::is_irreducible(*G, h));
        CHECK(poly::mod(*G, g, h).empty());
        product = poly::mul(*G, product, h);
      }
      // The radical divides g, and every root-free cofactor is covered.
      CHECK(poly::mod(*G, g, product).empty());
    }
  }
}

TEST_CASE("matrix basics") {
  auto F2 = Field::get(2);
  CHECK(FFMatrix::identity(F2, 3).rank() == 3);
  auto F3 = Field::get(3);
  auto d = FFMatrix::diagonal(F3, {1, F3->neg(1)});
  CHECK((d - FFMatrix::identity(F3, 2)).kernel_dim() == 1);
  CHECK_THROWS_AS(FFMatrix(F3, 2).inverse(), InvalidArgument);
}

TEST_CASE("property: inverse, determinant, Cayley-Hamilton") {
  std::mt19937_64 rng(20171001);
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    auto F = Field::get(q);
    for (int t = 0; t < 100 / 7 + 1; ++t) {
      const std::size_t n = 1 + rng() % 5;
      auto m = random_invertible(F, n, rng);
      CHECK((m.inverse() * m).is_identity());
      CHECK((m * m.inverse()).is_identity());
      auto b = random_matrix(F, n, rng);
      CHECK((m * b).determinant() == F->mul(m.determinant(), b.determinant()));
      auto chi = m.charpoly();
      CHECK(chi.size() == n + 1);
      CHECK(chi.back() == 1);
      CHECK(m.evaluate(chi) == FFMatrix(F, n));
      // chi(0) = (-1)^n det
      FieldElem c0 = chi[0];
      if (n % 2) c0 = F->neg(c0);
      CHECK(c0 == m.determinant());
    }
  }
}

TEST_CASE("nu: small cases") {
  auto F5 = Field::get(5);
  CHECK(nu(FFMatrix::identity(F5, 4)) == 0);
  CHECK(nu(FFMatrix::diagonal(F5, {4, 1, 1, 1})) == 1);
  CHECK(nu(FFMatrix::diagonal(F5, {2, 2, 2})) == 0);  // a scalar
  // Companion matrix of an irreducible cubic over GF(2): all eigenspaces
  // are 1-dimensional over GF(8).
  auto F2 = Field::get(2);
  auto c = FFMatrix::from_rows(F2, {{0, 1, 0}, {0, 0, 1}, {1, 1, 0}});
  REQUIRE(poly::is_irreducible(*F2, c.charpoly()));
  CHECK(nu(c) == 2);
  CHECK_THROWS_AS(nu(FFMatrix(F2, 2)), InvalidArgument);
}

TEST_CASE("property: nu against the dim ker f(x) / deg f oracle, and scalar invariance") {
  std::mt19937_64 rng(42);
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u}) {
    auto F = Field::get(q);
    for (int t = 0; t < 25; ++t) {
      const std::size_t n = 2 + rng() % 4;
      auto x = random_invertible(F, n, rng);
      std::size_t largest = 0;
      for (const auto& f : poly::distinct_irreducible_factors(*F, x.charpoly())) {
        const std::size_t oracle = x.evaluate(f).kernel_dim() / poly::degree(f);
        CHECK(eigenspace_dim(x, f) == oracle);
        largest = std::max(largest, oracle);
      }
      const std::size_t v = nu(x);
      CHECK(v == n - largest);
      for (FieldElem lambda = 1; lambda < q; ++lambda) CHECK(nu(x.scaled(lambda)) == v);
    }
  }
}

TEST_CASE("classical group orders") {
  CHECK(classical_order(ClassicalKind::kGL, 2, 3) == 48);
  CHECK(classical_order(ClassicalKind::kSL, 2, 23) == 12144);
  CHECK(classical_order(ClassicalKind::kPSL, 2, 23) == 6072);
  CHECK(classical_order(ClassicalKind::kSp, 6, 2) == 1451520);
  CHECK(classical_order(ClassicalKind::kPGL, 3, 3) == 5616);

  auto gl23 = act_on(build_classical(ClassicalKind::kGL, 2, 3), {ActionKind::kVectors, 0, {}, {}});
  CHECK(gl23.degree() == 9);
  CHECK(gl23.group().order() == 48);
  CHECK_FALSE(gl23.transitive());

  auto sl223 = act_on(build_classical(ClassicalKind::kSL, 2, 23), {ActionKind::kVectors, 0, {}, {}});
  CHECK(sl223.group().order() == 12144);
  auto psl223 = act_on(build_classical(ClassicalKind::kPSL, 2, 23), {ActionKind::kProjective, 0, {}, {}});
  CHECK(psl223.degree() == 24);
  CHECK(psl223.group().order() == 6072);

  auto pgl33 = act_on(build_classical(ClassicalKind::kPGL, 3, 3), {ActionKind::kProjective, 0, {}, {}});
  CHECK(pgl33.degree() == 13);
  CHECK(pgl33.group().order() == 5616);

  for (auto [n, q] : std::vector<std::pair<std::size_t, std::uint32_t>>{{4, 2}, {4, 3}, {2, 4}, {4, 4}, {2, 9}}) {
    auto sp = build_classical(ClassicalKind::kSp, n, q);
    for (const auto& g : sp.generators) CHECK(preserves_symplectic_form(g));
    auto act = act_on(sp, {ActionKind::kProjective, 0, {}, {}});
    CHECK(act.degree() == (std::uint64_t(std::pow(q, n)) - 1) / (q - 1));
  }
}

TEST_CASE("Sp(6,2) on minus-type forms") {
  auto sp = build_classical(ClassicalKind::kSp, 6, 2);
  for (const auto& g : sp.generators) CHECK(preserves_symplectic_form(g));
  auto act = act_on(sp, {ActionKind::kQuadraticForms, 0, {}, "minus"});
  CHECK(act.degree() == 28);
  CHECK(act.group().order() == 1451520);
  CHECK(act.group().is_primitive());
  auto plus = act_on(sp, {ActionKind::kQuadraticForms, 0, {}, "plus"});
  CHECK(plus.degree() == 36);
  CHECK_THROWS_AS(act_on(build_classical(ClassicalKind::kSp, 4, 3), {ActionKind::kQuadraticForms, 0, {}, "minus"}),
                  InvalidArgument);
}

TEST_CASE("subspace actions have Gaussian-binomial degree") {
  for (auto [n, k, q] : std::vector<std::tuple<std::size_t, std::size_t, std::uint32_t>>{
           {3, 1, 2}, {4, 2, 2}, {4, 2, 3}, {5, 2, 2}, {3, 2, 4}}) {
    auto act = act_on(build_classical(ClassicalKind::kSL, n, q), {ActionKind::kSubspaces, k, {}, {}});
    CHECK(act.degree() == gaussian_binomial(n, k, q));
    CHECK(act.transitive());
  }
}

TEST_CASE("induced permutations are homomorphic and recover matrices") {
  auto group = build_classical(ClassicalKind::kGL, 3, 3);
  auto act = act_on(group, {ActionKind::kVectors, 0, {}, {}});
  std::mt19937_64 rng(9);
  for (int t = 0; t < 20; ++t) {
    auto a = random_invertible(group.field, 3, rng), b = random_invertible(group.field, 3, rng);
    CHECK(act.induce(a * b) == act.induce(a) * act.induce(b));
    CHECK(act.matrix_from_vector_perm(act.induce(a)) == a);
    CHECK(act.induce(a).num_fixed_points() == std::pow(3, fixed_space_dim(a)));
  }
  auto gl23 = act_on(build_classical(ClassicalKind::kGL, 2, 3), {ActionKind::kVectors, 0, {}, {}});
  auto F3 = Field::get(3);
  CHECK(gl23.induce(FFMatrix::diagonal(F3, {1, 2})).num_fixed_points() == 3);
}

TEST_CASE("unsupported requests") {
  CHECK_THROWS_AS(build_classical(ClassicalKind::kSp, 3, 2), InvalidArgument);
  CHECK_THROWS_AS(build_classical(ClassicalKind::kGL, 2, 6), InvalidArgument);
  CHECK_THROWS_AS(act_on(build_classical(ClassicalKind::kPGL, 2, 3), {ActionKind::kVectors, 0, {}, {}}),
                  InvalidArgument);
  RealizeOptions small;
  small.degree_cap = 10;
  CHECK_THROWS_AS(act_on(build_classical(ClassicalKind::kGL, 3, 3), {ActionKind::kVectors, 0, {}, {}}, small),
                  CapExceeded);
}
