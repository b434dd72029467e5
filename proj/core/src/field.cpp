#include "fprlab/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>

namespace fprlab {

namespace {

// Dense polynomial arithmetic over the prime field GF(p), used only to
// build the tables of GF(p^k).
using PrimePoly = std::vector<std::uint32_t>;

PrimePoly prime_mod(PrimePoly a, const PrimePoly& m, std::uint32_t p) {
  const std::size_t dm = m.size() - 1;  // m is monic
  while (a.size() > dm) {
    const std::uint32_t c = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = (a[shift + i] + (p - c) * m[i]) % p;
    a.pop_back();
  }
  return a;
}

bool prime_divides(const PrimePoly& d, const PrimePoly& f, std::uint32_t p) {
  auto r = prime_mod(f, d, p);
  return std::all_of(r.begin(), r.end(), [](std::uint32_t c) { return c == 0; });
}

// Monic polynomial of the given degree whose lower coefficients are the
// base-p digits of `code`.
PrimePoly monic_from_code(std::uint64_t code, std::uint32_t degree, std::uint32_t p) {
  PrimePoly f(degree + 1, 0);
  for (std::uint32_t i = 0; i < degree; ++i) {
    f[i] = static_cast<std::uint32_t>(code % p);
    code /= p;
  }
  f[degree] = 1;
  return f;
}

bool prime_irreducible(const PrimePoly& f, std::uint32_t p) {
  const std::uint32_t n = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t d = 1; 2 * d <= n; ++d) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code)
      if (prime_divides(monic_from_code(code, d, p), f, p)) return false;
  }
  return true;
}

}  // namespace

Field::Field(std::uint32_t q) : q_(q) {
  std::uint32_t p = 0;
  for (std::uint32_t d = 2; d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  std::uint32_t k = 0;
  for (std::uint32_t r = q; r > 1; r /= p) {
    if (r % p != 0) throw InvalidArgument("field size " + std::to_string(q) + " is not a prime power");
    ++k;
  }
  p_ = p;
  k_ = k;
  // Lowest irreducible modulus of degree k.
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < k; ++i) count *= p;
  for (std::uint64_t code = 0; code < count; ++code) {
    auto f = monic_from_code(code, k, p);
    if (k > 1 && f[0] == 0) continue;
    if (prime_irreducible(f, p)) {
      modulus_ = f;
      break;
    }
  }
  auto to_poly = [&](std::uint32_t a) {
    PrimePoly f(k, 0);
    for (std::uint32_t i = 0; i < k; ++i) {
      f[i] = a % p;
      a /= p;
    }
    return f;
  };
  auto from_poly = [&](const PrimePoly& f) {
    std::uint32_t a = 0;
    for (std::size_t i = f.size(); i-- > 0;) a = a * p + f[i];
    return static_cast<FieldElem>(a);
  };
  add_.resize(q * q);
  mul_.resize(q * q);
  neg_.resize(q);
  inv_.assign(q, 0);
  for (std::uint32_t a = 0; a < q; ++a) {
    const auto fa = to_poly(a);
    PrimePoly na(k);
    for (std::uint32_t i = 0; i < k; ++i) na[i] = (p - fa[i]) % p;
    neg_[a] = from_poly(na);
    for (std::uint32_t b = 0; b < q; ++b) {
      const auto fb = to_poly(b);
      PrimePoly s(k);
      for (std::uint32_t i = 0; i < k; ++i) s[i] = (fa[i] + fb[i]) % p;
      add_[a * q + b] = from_poly(s);
      PrimePoly m(2 * k - 1, 0);
      for (std::uint32_t i = 0; i < k; ++i)
        for (std::uint32_t j = 0; j < k; ++j) m[i + j] = (m[i + j] + fa[i] * fb[j]) % p;
      auto r = prime_mod(m, modulus_, p);
      r.resize(k, 0);
      mul_[a * q + b] = from_poly(r);
    }
  }
  for (std::uint32_t a = 1; a < q; ++a)
    for (std::uint32_t b = 1; b < q; ++b)
      if (mul_[a * q + b] == 1) inv_[a] = static_cast<FieldElem>(b);
  for (std::uint32_t a = 1; a < q; ++a) {
    std::uint32_t order = 1;
    for (FieldElem x = static_cast<FieldElem>(a); x != 1; x = mul(x, static_cast<FieldElem>(a))) ++order;
    if (order == q - 1) {
      primitive_ = static_cast<FieldElem>(a);
      break;
    }
  }
}

std::shared_ptr<const Field> Field::get(std::uint32_t q) {
  if (q < 2 || q > 256) throw InvalidArgument("field size must lie in [2, 256]");
  static std::mutex mutex;
  static std::map<std::uint32_t, std::shared_ptr<const Field>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[q];
  if (!slot) slot = std::shared_ptr<const Field>(new Field(q));
  return slot;
}

FieldElem Field::inv(FieldElem a) const {
  if (a == 0) throw InvalidArgument("inverse of zero in GF(" + std::to_string(q_) + ")");
  return inv_[a];
}

FieldElem Field::pow(FieldElem a, std::uint64_t e) const {
  FieldElem r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

FieldElem Field::from_int(long long n) const {
  long long r = n % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<FieldElem>(r);
}

FieldElem Field::omega_pow(std::uint64_t e) const { return pow(primitive_, e % (q_ - 1)); }

std::string Field::to_string(FieldElem a) const {
  if (k_ == 1) return std::to_string(a);
  if (a == 0) return "0";
  std::uint64_t e = 0;
  for (FieldElem x = 1; x != a; x = mul(x, primitive_)) ++e;
  return e == 0 ? "1" : "w^" + std::to_string(e);
}

namespace poly {

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::size_t degree(const Poly& f) { return f.empty() ? 0 : f.size() - 1; }

bool is_zero(const Poly& f) { return f.empty(); }

Poly add(const Field& F, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = F.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  trim(r);
  return r;
}

Poly sub(const Field& F, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = F.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  trim(r);
  return r;
}

Poly mul(const Field& F, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

std::pair<Poly, Poly> divmod(const Field& F, const Poly& a, const Poly& b) {
  if (b.empty()) throw InvalidArgument("polynomial division by zero");
  Poly r = a;
  trim(r);
  if (r.size() < b.size()) return {Poly{}, r};
  Poly quotient(r.size() - b.size() + 1, 0);
  const FieldElem lead_inv = F.inv(b.back());
  while (!r.empty() && r.size() >= b.size()) {
    const std::size_t shift = r.size() - b.size();
    const FieldElem c = F.mul(r.back(), lead_inv);
    quotient[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] = F.sub(r[shift + i], F.mul(c, b[i]));
    trim(r);
  }
  trim(quotient);
  return {quotient, r};
}

Poly mod(const Field& F, const Poly& a, const Poly& m) { return divmod(F, a, m).second; }

Poly monic(const Field& F, const Poly& a) {
  if (a.empty()) return a;
  const FieldElem c = F.inv(a.back());
  Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.mul(a[i], c);
  return r;
}

Poly gcd(const Field& F, Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(F, a);
}

Poly inverse_mod(const Field& F, const Poly& a, const Poly& m) {
  // Extended Euclid tracking only the coefficient of a.
  Poly r0 = m, r1 = mod(F, a, m);
  Poly s0{}, s1{1};
  while (!r1.empty()) {
    auto [q, r] = divmod(F, r0, r1);
    Poly s = sub(F, s0, mul(F, q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.size() != 1) throw InvalidArgument("polynomial is not invertible modulo the modulus");
  const FieldElem c = F.inv(r0[0]);
  Poly result = s0;
  for (auto& v : result) v = F.mul(v, c);
  return mod(F, result, m);
}

Poly pow_mod(const Field& F, const Poly& a, const BigInt& e, const Poly& m) {
  Poly result = mod(F, Poly{1}, m);
  Poly base = mod(F, a, m);
  const std::size_t bits = e == 0 ? 0 : msb(e) + 1;
  for (std::size_t i = bits; i-- > 0;) {
    result = mod(F, mul(F, result, result), m);
    if (bit_test(e, static_cast<unsigned>(i))) result = mod(F, mul(F, result, base), m);
  }
  return result;
}

Poly x() { return Poly{0, 1}; }

namespace {

BigInt big_pow(std::uint64_t base, std::size_t e) {
  BigInt r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= base;
  return r;
}

// Splits a squarefree product of distinct degree-d irreducibles.
void equal_degree_split(const Field& F, const Poly& g, std::size_t d, std::mt19937_64& rng,
                        std::vector<Poly>& out) {
  if (degree(g) == d) {
    out.push_back(g);
    return;
  }
  const std::size_t n = degree(g);
  for (;;) {
    Poly a(n);
    for (auto& c : a) c = static_cast<FieldElem>(rng() % F.q());
    trim(a);
    if (degree(a) < 1) continue;
    Poly b;
    if (F.p() == 2) {
      // Absolute trace a + a^2 + ... + a^(2^(kd-1)).
      Poly t = a, power = a;
      for (std::size_t i = 1; i < F.k() * d; ++i) {
        power = mod(F, mul(F, power, power), g);
        t = add(F, t, power);
      }
      b = t;
    } else {
      b = sub(F, pow_mod(F, a, (big_pow(F.q(), d) - 1) / 2, g), Poly{1});
    }
    Poly h = gcd(F, g, b);
    if (degree(h) == 0 || degree(h) == n) continue;
    equal_degree_split(F, h, d, rng, out);
    equal_degree_split(F, divmod(F, g, h).first, d, rng, out);
    return;
  }
}

}  // namespace

std::vector<Poly> distinct_irreducible_factors(const Field& F, const Poly& f_in) {
  Poly f = monic(F, f_in);
  trim(f);
  if (degree(f) < 1) return {};
  std::vector<Poly> factors;
  std::mt19937_64 rng(0x5eed);
  // gcd(f, t^(q^d) - t) is the product of the distinct irreducible factors
  // of f whose degree divides d.
  Poly frob = mod(F, x(), f);
  for (std::size_t d = 1; d <= degree(f); ++d) {
    frob = pow_mod(F, frob, BigInt(F.q()), f);
    Poly g = gcd(F, f, sub(F, frob, x()));
    for (const auto& known : factors)
      if (d % degree(known) == 0) {
        auto [quot, rem] = divmod(F, g, known);
        if (rem.empty()) g = quot;
      }
    if (degree(g) >= 1) equal_degree_split(F, monic(F, g), d, rng, factors);
  }
  for (auto& h : factors) h = monic(F, h);
  std::sort(factors.begin(), factors.end(), [](const Poly& a, const Poly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return factors;
}

bool is_irreducible(const Field& F, const Poly& f) {
  if (degree(f) < 1) return false;
  auto factors = distinct_irreducible_factors(F, f);
  return factors.size() == 1 && degree(factors[0]) == degree(f);
}

std::string to_string(const Field& F, const Poly& f) {
  if (f.empty()) return "0";
  std::string s;
  for (std::size_t i = f.size(); i-- > 0;) {
    if (f[i] == 0) continue;
    if (!s.empty()) s += " + ";
    const bool unit = f[i] == 1 && i > 0;
    if (!unit) s += F.to_string(f[i]);
    if (i > 0) s += (unit ? "" : "*") + std::string(i == 1 ? "t" : "t^" + std::to_string(i));
  }
  return s;
}

}  // namespace poly

}  // namespace fprlab
