#include "fprlab/matrix.hpp"

#include <algorithm>

namespace fprlab {

FFMatrix::FFMatrix(FieldPtr field, std::size_t n) : field_(std::move(field)), n_(n), a_(n * n, 0) {
  if (!field_) throw InvalidArgument("matrix needs a field");
  if (n == 0) throw InvalidArgument("matrix dimension must be positive");
}

FFMatrix FFMatrix::identity(FieldPtr field, std::size_t n) {
  FFMatrix m(std::move(field), n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

FFMatrix FFMatrix::diagonal(FieldPtr field, const std::vector<FieldElem>& diag) {
  FFMatrix m(std::move(field), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m.set(i, i, diag[i]);
  return m;
}

FFMatrix FFMatrix::from_rows(FieldPtr field, const std::vector<std::vector<FieldElem>>& rows) {
  FFMatrix m(field, rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw InvalidArgument("matrix rows must form a square");
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (rows[i][j] >= field->q()) throw InvalidArgument("matrix entry outside the field");
      m.set(i, j, rows[i][j]);
    }
  }
  return m;
}

std::vector<FieldElem> FFMatrix::row(std::size_t i) const {
  return {a_.begin() + static_cast<std::ptrdiff_t>(i * n_), a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * n_)};
}

static void check_compatible(const FFMatrix& a, const FFMatrix& b) {
  if (a.n() != b.n() || a.F().q() != b.F().q()) throw DegreeMismatch("matrices over different fields or dimensions");
}

FFMatrix operator*(const FFMatrix& a, const FFMatrix& b) {
  check_compatible(a, b);
  const Field& F = a.F();
  const std::size_t n = a.n();
  FFMatrix c(a.field(), n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const FieldElem x = a.at(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c.a_[i * n + j] = F.add(c.a_[i * n + j], F.mul(x, b.at(k, j)));
    }
  return c;
}

FFMatrix operator+(const FFMatrix& a, const FFMatrix& b) {
  check_compatible(a, b);
  FFMatrix c(a.field(), a.n());
  for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] = a.F().add(a.a_[i], b.a_[i]);
  return c;
}

FFMatrix operator-(const FFMatrix& a, const FFMatrix& b) {
  check_compatible(a, b);
  FFMatrix c(a.field(), a.n());
  for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] = a.F().sub(a.a_[i], b.a_[i]);
  return c;
}

FFMatrix FFMatrix::scaled(FieldElem c) const {
  FFMatrix m = *this;
  for (auto& v : m.a_) v = F().mul(v, c);
  return m;
}

FFMatrix FFMatrix::transpose() const {
  FFMatrix m(field_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) m.set(j, i, at(i, j));
  return m;
}

namespace {

// Row reduction over any "field" given by callbacks, pivoting only in the
// first `cols` columns; reduces `rows` in place and returns the rank.
template <class Elem, class Ops>
std::size_t row_reduce(std::vector<std::vector<Elem>>& rows, std::size_t cols, const Ops& ops) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && ops.is_zero(rows[pivot][c])) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    const Elem inv = ops.inv(rows[rank][c]);
    for (auto& v : rows[rank]) v = ops.mul(v, inv);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || ops.is_zero(rows[r][c])) continue;
      const Elem factor = rows[r][c];
      for (std::size_t j = 0; j < rows[r].size(); ++j) rows[r][j] = ops.sub(rows[r][j], ops.mul(factor, rows[rank][j]));
    }
    ++rank;
  }
  return rank;
}

struct BaseOps {
  const Field& F;
  bool is_zero(FieldElem a) const { return a == 0; }
  FieldElem inv(FieldElem a) const { return F.inv(a); }
  FieldElem mul(FieldElem a, FieldElem b) const { return F.mul(a, b); }
  FieldElem sub(FieldElem a, FieldElem b) const { return F.sub(a, b); }
};

// GF(q)[t]/(f) for irreducible f.
struct ExtOps {
  const Field& F;
  const Poly& f;
  bool is_zero(const Poly& a) const { return a.empty(); }
  Poly inv(const Poly& a) const { return poly::inverse_mod(F, a, f); }
  Poly mul(const Poly& a, const Poly& b) const { return poly::mod(F, poly::mul(F, a, b), f); }
  Poly sub(const Poly& a, const Poly& b) const { return poly::sub(F, a, b); }
};

std::vector<std::vector<FieldElem>> rows_of(const FFMatrix& m) {
  std::vector<std::vector<FieldElem>> rows(m.n());
  for (std::size_t i = 0; i < m.n(); ++i) rows[i] = m.row(i);
  return rows;
}

}  // namespace

std::size_t FFMatrix::rank() const {
  auto rows = rows_of(*this);
  return row_reduce(rows, n_, BaseOps{F()});
}

FFMatrix FFMatrix::inverse() const {
  std::vector<std::vector<FieldElem>> rows(n_, std::vector<FieldElem>(2 * n_, 0));
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) rows[i][j] = at(i, j);
    rows[i][n_ + i] = 1;
  }
  if (row_reduce(rows, n_, BaseOps{F()}) < n_) throw InvalidArgument("singular matrix has no inverse");
  FFMatrix m(field_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) m.set(i, j, rows[i][n_ + j]);
  return m;
}

FieldElem FFMatrix::determinant() const {
  auto rows = rows_of(*this);
  const Field& f = F();
  FieldElem det = 1;
  for (std::size_t c = 0; c < n_; ++c) {
    std::size_t pivot = c;
    while (pivot < n_ && rows[pivot][c] == 0) ++pivot;
    if (pivot == n_) return 0;
    if (pivot != c) {
      std::swap(rows[pivot], rows[c]);
      det = f.neg(det);
    }
    det = f.mul(det, rows[c][c]);
    const FieldElem inv = f.inv(rows[c][c]);
    for (std::size_t r = c + 1; r < n_; ++r) {
      const FieldElem factor = f.mul(rows[r][c], inv);
      if (factor == 0) continue;
      for (std::size_t j = c; j < n_; ++j) rows[r][j] = f.sub(rows[r][j], f.mul(factor, rows[c][j]));
    }
  }
  return det;
}

bool FFMatrix::is_identity() const { return *this == identity(field_, n_); }

std::vector<FieldElem> FFMatrix::apply(const std::vector<FieldElem>& v) const {
  if (v.size() != n_) throw DegreeMismatch("vector length differs from matrix dimension");
  std::vector<FieldElem> w(n_, 0);
  for (std::size_t i = 0; i < n_; ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < n_; ++j) w[j] = F().add(w[j], F().mul(v[i], at(i, j)));
  }
  return w;
}

Poly FFMatrix::charpoly() const {
  // Similarity transform to upper Hessenberg form, then the standard
  // recurrence on leading principal minors.
  const Field& f = F();
  const std::size_t n = n_;
  auto h = rows_of(*this);
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && h[i][m - 1] == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      std::swap(h[i], h[m]);
      for (std::size_t r = 0; r < n; ++r) std::swap(h[r][i], h[r][m]);
    }
    const FieldElem inv = f.inv(h[m][m - 1]);
    for (std::size_t r = m + 1; r < n; ++r) {
      const FieldElem u = f.mul(h[r][m - 1], inv);
      if (u == 0) continue;
      for (std::size_t j = 0; j < n; ++j) h[r][j] = f.sub(h[r][j], f.mul(u, h[m][j]));
      for (std::size_t j = 0; j < n; ++j) h[j][m] = f.add(h[j][m], f.mul(u, h[j][r]));
    }
  }
  std::vector<Poly> p(n + 1);
  p[0] = Poly{1};
  for (std::size_t m = 1; m <= n; ++m) {
    p[m] = poly::mul(f, Poly{f.neg(h[m - 1][m - 1]), 1}, p[m - 1]);
    FieldElem t = 1;
    for (std::size_t i = 1; i < m; ++i) {
      t = f.mul(t, h[m - i][m - i - 1]);
      const FieldElem c = f.mul(t, h[m - i - 1][m - 1]);
      if (c == 0) continue;
      p[m] = poly::sub(f, p[m], poly::mul(f, Poly{c}, p[m - i - 1]));
    }
  }
  return p[n];
}

FFMatrix FFMatrix::evaluate(const Poly& poly) const {
  FFMatrix result(field_, n_);
  for (std::size_t i = poly.size(); i-- > 0;) {
    result = result * *this;
    for (std::size_t d = 0; d < n_; ++d) result.set(d, d, F().add(result.at(d, d), poly[i]));
  }
  return result;
}

std::string FFMatrix::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < n_; ++i) {
    if (i) s += ";";
    for (std::size_t j = 0; j < n_; ++j) {
      if (j) s += ",";
      s += F().to_string(at(i, j));
    }
  }
  return s + "]";
}

std::size_t eigenspace_dim(const FFMatrix& m, const Poly& f) {
  const Field& F = m.F();
  const std::size_t n = m.n();
  const Poly theta = poly::mod(F, poly::x(), f);
  std::vector<std::vector<Poly>> rows(n, std::vector<Poly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Poly e = m.at(i, j) ? Poly{m.at(i, j)} : Poly{};
      if (i == j) e = poly::sub(F, e, theta);
      rows[i][j] = std::move(e);
    }
  return n - row_reduce(rows, n, ExtOps{F, f});
}

std::size_t nu(const FFMatrix& x) {
  if (!x.is_invertible()) throw InvalidArgument("nu is defined for invertible matrices");
  const Field& F = x.F();
  std::size_t best = x.n();
  for (FieldElem lambda = 1; lambda < F.q(); ++lambda) {
    const FFMatrix y = x.scaled(lambda);
    std::size_t largest = 0;
    for (const auto& f : poly::distinct_irreducible_factors(F, y.charpoly()))
      largest = std::max(largest, eigenspace_dim(y, f));
    best = std::min(best, x.n() - largest);
  }
  return best;
}

std::size_t fixed_space_dim(const FFMatrix& x) {
  return (x - FFMatrix::identity(x.field(), x.n())).kernel_dim();
}

}  // namespace fprlab
