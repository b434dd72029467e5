#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "fprlab/common.hpp"

namespace fprlab {

/// Field elements are small integers: the base-p digits of an element are
/// the coefficients of its polynomial representative, constant term first.
using FieldElem = std::uint16_t;

/// GF(q), q = p^k <= 256, with full addition and multiplication tables.
class Field {
 public:
  /// Shared instance for GF(q). Throws InvalidArgument unless q is a prime
  /// power in [2, 256].
  static std::shared_ptr<const Field> get(std::uint32_t q);

  std::uint32_t p() const { return p_; }
  std::uint32_t k() const { return k_; }
  std::uint32_t q() const { return q_; }
  /// Monic irreducible modulus over GF(p), constant term first; the
  /// lexicographically least one of degree k.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  /// Least element generating the multiplicative group.
  FieldElem primitive() const { return primitive_; }

  FieldElem add(FieldElem a, FieldElem b) const { return add_[a * q_ + b]; }
  FieldElem sub(FieldElem a, FieldElem b) const { return add_[a * q_ + neg_[b]]; }
  FieldElem neg(FieldElem a) const { return neg_[a]; }
  FieldElem mul(FieldElem a, FieldElem b) const { return mul_[a * q_ + b]; }
  /// Throws InvalidArgument for zero.
  FieldElem inv(FieldElem a) const;
  FieldElem div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }
  FieldElem pow(FieldElem a, std::uint64_t e) const;
  /// Image of an integer under Z -> GF(p) <= GF(q).
  FieldElem from_int(long long n) const;
  /// omega^e for the primitive element omega.
  FieldElem omega_pow(std::uint64_t e) const;

  std::string to_string(FieldElem a) const;

 private:
  explicit Field(std::uint32_t q);

  std::uint32_t p_ = 0, k_ = 0, q_ = 0;
  std::vector<std::uint32_t> modulus_;
  FieldElem primitive_ = 1;
  std::vector<FieldElem> add_, mul_, neg_, inv_;
};

using FieldPtr = std::shared_ptr<const Field>;

/// Polynomials over a Field, constant term first, with no trailing zeros
/// (the zero polynomial is empty).
using Poly = std::vector<FieldElem>;

namespace poly {

void trim(Poly& f);
std::size_t degree(const Poly& f);  // degree of zero is 0
bool is_zero(const Poly& f);
Poly add(const Field& F, const Poly& a, const Poly& b);
Poly sub(const Field& F, const Poly& a, const Poly& b);
Poly mul(const Field& F, const Poly& a, const Poly& b);
/// Quotient and remainder; throws InvalidArgument for a zero divisor.
std::pair<Poly, Poly> divmod(const Field& F, const Poly& a, const Poly& b);
Poly mod(const Field& F, const Poly& a, const Poly& m);
Poly monic(const Field& F, const Poly& a);
/// Monic gcd (empty when both are zero).
Poly gcd(const Field& F, Poly a, Poly b);
/// Inverse of a modulo m; throws InvalidArgument if not coprime.
Poly inverse_mod(const Field& F, const Poly& a, const Poly& m);
/// a^e mod m for an arbitrary-precision exponent.
Poly pow_mod(const Field& F, const Poly& a, const BigInt& e, const Poly& m);
/// t, as a polynomial.
Poly x();
/// Distinct monic irreducible factors (multiplicities dropped), sorted by
/// (degree, coefficients). Deterministic.
std::vector<Poly> distinct_irreducible_factors(const Field& F, const Poly& f);
bool is_irreducible(const Field& F, const Poly& f);
std::string to_string(const Field& F, const Poly& f);

}  // namespace poly

}  // namespace fprlab
