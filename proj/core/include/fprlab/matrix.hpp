#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fprlab/field.hpp"

namespace fprlab {

/// Square matrix over a small finite field. Matrices act on row vectors:
/// v -> v M, so (v M) N = v (M N).
class FFMatrix {
 public:
  FFMatrix() = default;
  /// Zero matrix.
  FFMatrix(FieldPtr field, std::size_t n);
  static FFMatrix identity(FieldPtr field, std::size_t n);
  static FFMatrix diagonal(FieldPtr field, const std::vector<FieldElem>& diag);
  /// Rows given as field-element codes; throws InvalidArgument when not square.
  static FFMatrix from_rows(FieldPtr field, const std::vector<std::vector<FieldElem>>& rows);

  const FieldPtr& field() const { return field_; }
  const Field& F() const { return *field_; }
  std::size_t n() const { return n_; }
  FieldElem at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, FieldElem v) { a_[i * n_ + j] = v; }
  std::vector<FieldElem> row(std::size_t i) const;

  friend FFMatrix operator*(const FFMatrix& a, const FFMatrix& b);
  friend FFMatrix operator+(const FFMatrix& a, const FFMatrix& b);
  friend FFMatrix operator-(const FFMatrix& a, const FFMatrix& b);
  friend bool operator==(const FFMatrix& a, const FFMatrix& b) { return a.n_ == b.n_ && a.a_ == b.a_; }

  FFMatrix scaled(FieldElem c) const;
  FFMatrix transpose() const;
  /// Throws InvalidArgument for singular matrices.
  FFMatrix inverse() const;
  FieldElem determinant() const;
  std::size_t rank() const;
  std::size_t kernel_dim() const { return n_ - rank(); }
  bool is_identity() const;
  bool is_invertible() const { return rank() == n_; }

  /// v M for a row vector v.
  std::vector<FieldElem> apply(const std::vector<FieldElem>& v) const;

  /// det(t I - M), monic, constant term first.
  Poly charpoly() const;
  /// f(M).
  FFMatrix evaluate(const Poly& f) const;

  std::string to_string() const;

 private:
  FieldPtr field_;
  std::size_t n_ = 0;
  std::vector<FieldElem> a_;
};

/// Dimension, over GF(q)[t]/(f) for an irreducible f, of the eigenspace of
/// M for the eigenvalue theta = t mod f. When f is linear this is an
/// eigenspace over GF(q) itself.
std::size_t eigenspace_dim(const FFMatrix& m, const Poly& f);

/// n minus the dimension of the largest eigenspace of x over the algebraic
/// closure, minimised over the q-1 scalar multiples of x. Throws
/// InvalidArgument for singular x.
std::size_t nu(const FFMatrix& x);

/// Number of vectors v with v x = v: q^d with d = dim ker(x - I).
std::size_t fixed_space_dim(const FFMatrix& x);

}  // namespace fprlab
