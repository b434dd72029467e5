#include "fprlab/classical.hpp"

#include <algorithm>
#include <numeric>

namespace fprlab {

std::string to_string(ClassicalKind kind) {
  switch (kind) {
    case ClassicalKind::kGL: return "gl";
    case ClassicalKind::kSL: return "sl";
    case ClassicalKind::kPGL: return "pgl";
    case ClassicalKind::kPSL: return "psl";
    case ClassicalKind::kSp: return "sp";
    case ClassicalKind::kUser: return "user";
  }
  return "unknown";
}

std::string MatrixGroup::name() const {
  return to_string(kind) + ":" + std::to_string(n) + ":" + std::to_string(field->q());
}

namespace {

BigInt gl_order(std::size_t n, std::uint32_t q) {
  BigInt order = 1, qi = 1, qn = 1;
  for (std::size_t i = 0; i < n; ++i) qn *= q;
  for (std::size_t i = 0; i < n; ++i) {
    order *= qn - qi;
    qi *= q;
  }
  return order;
}

BigInt sp_order(std::size_t n, std::uint32_t q) {
  const std::size_t m = n / 2;
  BigInt order = 1, q2i = 1;
  for (std::size_t i = 0; i < m * m; ++i) order *= q;
  for (std::size_t i = 1; i <= m; ++i) {
    q2i *= BigInt(q) * q;
    order *= q2i - 1;
  }
  return order;
}

void check_kind(ClassicalKind kind, std::size_t n, std::uint32_t q) {
  if (kind == ClassicalKind::kUser) throw InvalidArgument("user matrix groups have no order formula");
  (void)Field::get(q);
  if (n == 0 || n > 8) throw InvalidArgument("dimension must lie in [1, 8]");
  if (kind == ClassicalKind::kSp && n % 2 != 0) throw InvalidArgument("symplectic groups need even dimension");
  if ((kind == ClassicalKind::kSL || kind == ClassicalKind::kPSL) && n < 2)
    throw InvalidArgument("special linear groups need dimension at least 2");
}

std::uint64_t scalars_in(ClassicalKind kind, std::size_t n, std::uint32_t q) {
  switch (kind) {
    case ClassicalKind::kGL:
    case ClassicalKind::kPGL: return q - 1;
    case ClassicalKind::kSL:
    case ClassicalKind::kPSL: return std::gcd<std::uint64_t>(n, q - 1);
    case ClassicalKind::kSp: return q % 2 == 0 ? 1 : 2;
    default: return 1;
  }
}

}  // namespace

BigInt classical_order(ClassicalKind kind, std::size_t n, std::uint32_t q) {
  check_kind(kind, n, q);
  switch (kind) {
    case ClassicalKind::kGL: return gl_order(n, q);
    case ClassicalKind::kSL: return gl_order(n, q) / (q - 1);
    case ClassicalKind::kPGL: return gl_order(n, q) / (q - 1);
    case ClassicalKind::kPSL: return gl_order(n, q) / (q - 1) / scalars_in(kind, n, q);
    case ClassicalKind::kSp: return sp_order(n, q);
    default: break;
  }
  return 0;
}

FFMatrix elementary_transvection(FieldPtr field, std::size_t n, std::size_t i, std::size_t j, FieldElem a) {
  FFMatrix m = FFMatrix::identity(std::move(field), n);
  m.set(i, j, a);
  return m;
}

FFMatrix symplectic_form(FieldPtr field, std::size_t n) {
  if (n % 2 != 0) throw InvalidArgument("symplectic forms need even dimension");
  const std::size_t m = n / 2;
  FFMatrix j(field, n);
  for (std::size_t i = 0; i < m; ++i) {
    j.set(i, m + i, 1);
    j.set(m + i, i, field->neg(1));
  }
  return j;
}

bool preserves_symplectic_form(const FFMatrix& g) {
  const FFMatrix j = symplectic_form(g.field(), g.n());
  return g * j * g.transpose() == j;
}

FFMatrix symplectic_transvection(FieldPtr field, const std::vector<FieldElem>& u, FieldElem a) {
  const std::size_t n = u.size();
  const FFMatrix j = symplectic_form(field, n);
  const Field& F = *field;
  // c = J u^T, so v T = v + a (v c) u.
  std::vector<FieldElem> c(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) c[i] = F.add(c[i], F.mul(j.at(i, k), u[k]));
  FFMatrix t = FFMatrix::identity(field, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) t.set(i, k, F.add(t.at(i, k), F.mul(a, F.mul(c[i], u[k]))));
  return t;
}

MatrixGroup build_classical(ClassicalKind kind, std::size_t n, std::uint32_t q) {
  check_kind(kind, n, q);
  MatrixGroup group;
  group.field = Field::get(q);
  group.n = n;
  group.kind = kind;
  const Field& F = *group.field;
  std::vector<FieldElem> basis;
  for (std::uint32_t e = 0; e < F.k(); ++e) basis.push_back(F.omega_pow(e));
  if (kind == ClassicalKind::kSp) {
    const std::size_t m = n / 2;
    std::vector<std::vector<FieldElem>> us;
    auto unit = [n](std::size_t i) {
      std::vector<FieldElem> u(n, 0);
      u[i] = 1;
      return u;
    };
    for (std::size_t i = 0; i < n; ++i) us.push_back(unit(i));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) {
        auto u = unit(i);
        u[j] = 1;
        us.push_back(u);
        u = unit(i);
        u[m + j] = 1;
        us.push_back(u);
      }
    for (const auto& u : us)
      for (FieldElem a : basis) group.generators.push_back(symplectic_transvection(group.field, u, a));
    return group;
  }
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (FieldElem a : basis) {
      group.generators.push_back(elementary_transvection(group.field, n, i, i + 1, a));
      group.generators.push_back(elementary_transvection(group.field, n, i + 1, i, a));
    }
  if ((kind == ClassicalKind::kGL || kind == ClassicalKind::kPGL) && q > 2) {
    std::vector<FieldElem> d(n, 1);
    d[0] = F.primitive();
    group.generators.push_back(FFMatrix::diagonal(group.field, d));
  }
  if (group.generators.empty()) group.generators.push_back(FFMatrix::identity(group.field, n));
  return group;
}

std::string MatrixAction::key(const std::vector<FieldElem>& v) const {
  return std::string(reinterpret_cast<const char*>(v.data()), v.size() * sizeof(FieldElem));
}

namespace {

// Reduced row echelon form of a k x n matrix given row-major; returns rank.
std::size_t rref(const Field& F, std::vector<FieldElem>& a, std::size_t k, std::size_t n) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < n && rank < k; ++c) {
    std::size_t pivot = rank;
    while (pivot < k && a[pivot * n + c] == 0) ++pivot;
    if (pivot == k) continue;
    for (std::size_t j = 0; j < n; ++j) std::swap(a[pivot * n + j], a[rank * n + j]);
    const FieldElem inv = F.inv(a[rank * n + c]);
    for (std::size_t j = 0; j < n; ++j) a[rank * n + j] = F.mul(a[rank * n + j], inv);
    for (std::size_t r = 0; r < k; ++r) {
      if (r == rank || a[r * n + c] == 0) continue;
      const FieldElem f = a[r * n + c];
      for (std::size_t j = 0; j < n; ++j) a[r * n + j] = F.sub(a[r * n + j], F.mul(f, a[rank * n + j]));
    }
    ++rank;
  }
  return rank;
}

// Q_a(v) = sum a_i v_i^2 + sum_{i<m} v_i v_{m+i}.
FieldElem quadratic_form(const Field& F, const std::vector<FieldElem>& a, const std::vector<FieldElem>& v) {
  const std::size_t m = v.size() / 2;
  FieldElem s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) s = F.add(s, F.mul(a[i], F.mul(v[i], v[i])));
  for (std::size_t i = 0; i < m; ++i) s = F.add(s, F.mul(v[i], v[m + i]));
  return s;
}

std::vector<FieldElem> decode(std::uint64_t code, std::size_t n, std::uint32_t q) {
  std::vector<FieldElem> v(n);
  for (std::size_t i = n; i-- > 0;) {
    v[i] = static_cast<FieldElem>(code % q);
    code /= q;
  }
  return v;
}

std::uint64_t ipow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

std::vector<FieldElem> MatrixAction::canonical(const std::vector<FieldElem>& d) const {
  const Field& F = *source_.field;
  const std::size_t n = source_.n;
  switch (kind_) {
    case ActionKind::kProjective: {
      std::vector<FieldElem> v = d;
      auto it = std::find_if(v.begin(), v.end(), [](FieldElem x) { return x != 0; });
      if (it == v.end()) throw InvalidArgument("the zero vector is not a projective point");
      const FieldElem inv = F.inv(*it);
      for (auto& x : v) x = F.mul(x, inv);
      return v;
    }
    case ActionKind::kSubspaces: {
      std::vector<FieldElem> a = d;
      if (a.size() != k_ * n) throw InvalidArgument("subspace basis has the wrong shape");
      if (rref(F, a, k_, n) != k_) throw InvalidArgument("subspace basis is not linearly independent");
      return a;
    }
    default: return d;
  }
}

std::vector<FieldElem> MatrixAction::image(const std::vector<FieldElem>& point, const FFMatrix& g,
                                           const FFMatrix& g_inv) const {
  const Field& F = *source_.field;
  const std::size_t n = source_.n;
  switch (kind_) {
    case ActionKind::kVectors: return g.apply(point);
    case ActionKind::kProjective: return canonical(g.apply(point));
    case ActionKind::kSubspaces: {
      std::vector<FieldElem> rows;
      rows.reserve(point.size());
      for (std::size_t r = 0; r < k_; ++r) {
        std::vector<FieldElem> v(point.begin() + static_cast<std::ptrdiff_t>(r * n),
                                 point.begin() + static_cast<std::ptrdiff_t>((r + 1) * n));
        auto w = g.apply(v);
        rows.insert(rows.end(), w.begin(), w.end());
      }
      rref(F, rows, k_, n);
      return rows;
    }
    case ActionKind::kQuadraticForms: {
      // (Q^g)(v) = Q(v g^-1); its diagonal coefficients are Q(e_i g^-1).
      std::vector<FieldElem> a(n);
      for (std::size_t i = 0; i < n; ++i) a[i] = quadratic_form(F, point, g_inv.row(i));
      return a;
    }
    default: break;
  }
  throw InvalidArgument("unsupported matrix action");
}

Permutation MatrixAction::induce(const FFMatrix& g) const {
  if (g.n() != source_.n || g.F().q() != source_.field->q())
    throw DegreeMismatch("matrix does not match the acting group");
  const FFMatrix g_inv = kind_ == ActionKind::kQuadraticForms ? g.inverse() : g;
  std::vector<Point> img(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) {
    auto it = index_.find(key(image(points_[i], g, g_inv)));
    if (it == index_.end()) throw NotAMember("matrix does not preserve the action domain");
    img[i] = it->second;
  }
  return Permutation(std::move(img));
}

std::string MatrixAction::label(Point omega) const {
  if (omega >= points_.size()) throw InvalidArgument("point outside the action domain");
  const Field& F = *source_.field;
  const auto& v = points_[omega];
  std::string s = kind_ == ActionKind::kProjective ? "<" : "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += (kind_ == ActionKind::kSubspaces && i % source_.n == 0) ? ";" : ",";
    s += F.to_string(v[i]);
  }
  return s + (kind_ == ActionKind::kProjective ? ">" : ")");
}

Point MatrixAction::point_index(const std::vector<FieldElem>& description) const {
  auto it = index_.find(key(canonical(description)));
  if (it == index_.end()) throw InvalidArgument("no such point in the action domain");
  return it->second;
}

FFMatrix MatrixAction::matrix_from_vector_perm(const Permutation& p) const {
  if (kind_ != ActionKind::kVectors) throw InvalidArgument("matrices are recovered only from the vectors action");
  if (p.degree() != points_.size()) throw DegreeMismatch("permutation degree differs from the action degree");
  const std::size_t n = source_.n;
  FFMatrix m(source_.field, n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<FieldElem> e(n, 0);
    e[i] = 1;
    const auto& row = points_[p.image(point_index(e))];
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, row[j]);
  }
  return m;
}

MatrixAction act_on(const MatrixGroup& group, const ActionSpec& spec, const RealizeOptions& options,
                    std::uint64_t seed) {
  const Field& F = *group.field;
  const std::uint32_t q = F.q();
  const std::size_t n = group.n;
  MatrixAction action(group);
  action.kind_ = spec.kind;
  auto check_cap = [&](const BigInt& degree) {
    if (degree > options.degree_cap)
      throw CapExceeded("action degree " + degree.str() + " exceeds degree cap " + std::to_string(options.degree_cap));
  };
  auto add_point = [&](std::vector<FieldElem> v) {
    action.index_.emplace(action.key(v), static_cast<Point>(action.points_.size()));
    action.points_.push_back(std::move(v));
  };
  // Orbit of `start` under the generators, sorted for stable labels.
  auto orbit_points = [&](std::vector<FieldElem> start) {
    std::vector<std::vector<FieldElem>> found{start};
    std::unordered_map<std::string, bool> seen{{action.key(start), true}};
    std::vector<FFMatrix> inverses;
    for (const auto& g : group.generators) inverses.push_back(g.inverse());
    for (std::size_t i = 0; i < found.size(); ++i)
      for (std::size_t s = 0; s < group.generators.size(); ++s) {
        auto w = action.image(found[i], group.generators[s], inverses[s]);
        if (seen.emplace(action.key(w), true).second) {
          found.push_back(std::move(w));
          if (found.size() > options.degree_cap) check_cap(BigInt(found.size()));
        }
      }
    std::sort(found.begin(), found.end());
    for (auto& v : found) add_point(std::move(v));
  };

  BigInt kernel = 1;
  switch (spec.kind) {
    case ActionKind::kVectors: {
      if (group.projective()) throw InvalidArgument("projective groups do not act on vectors");
      check_cap(BigInt(ipow(q, n)));
      for (std::uint64_t c = 0; c < ipow(q, n); ++c) add_point(decode(c, n, q));
      action.transitive_ = false;
      break;
    }
    case ActionKind::kProjective: {
      check_cap(BigInt((ipow(q, n) - 1) / (q - 1)));
      for (std::uint64_t c = 1; c < ipow(q, n); ++c) {
        auto v = decode(c, n, q);
        if (*std::find_if(v.begin(), v.end(), [](FieldElem x) { return x != 0; }) == 1) add_point(std::move(v));
      }
      kernel = scalars_in(group.kind, n, q);
      break;
    }
    case ActionKind::kSubspaces: {
      if (spec.k == 0 || spec.k >= n) throw InvalidArgument("subspace dimension must satisfy 1 <= k < n");
      action.k_ = spec.k;
      std::vector<FieldElem> start(spec.k * n, 0);
      for (std::size_t i = 0; i < spec.k; ++i) start[i * n + i] = 1;
      orbit_points(start);
      kernel = scalars_in(group.kind, n, q);
      break;
    }
    case ActionKind::kQuadraticForms: {
      if (group.kind != ClassicalKind::kSp) throw InvalidArgument("quadratic-form actions need a symplectic group");
      if (q % 2 != 0) throw InvalidArgument("quadratic-form actions need even q");
      if (spec.form_type != "minus" && spec.form_type != "plus")
        throw InvalidArgument("form type must be 'minus' or 'plus'");
      check_cap(BigInt(ipow(q, n)));
      const std::size_t m = n / 2;
      // Number of zeros of Q on V (including 0) identifies the type.
      const std::uint64_t zeros = spec.form_type == "minus"
                                      ? ipow(q, 2 * m - 1) - ipow(q, m) + ipow(q, m - 1)
                                      : ipow(q, 2 * m - 1) + ipow(q, m) - ipow(q, m - 1);
      std::vector<FieldElem> start;
      for (std::uint64_t c = 0; c < ipow(q, n) && start.empty(); ++c) {
        auto a = decode(c, n, q);
        std::uint64_t count = 0;
        for (std::uint64_t v = 0; v < ipow(q, n); ++v)
          if (quadratic_form(F, a, decode(v, n, q)) == 0) ++count;
        if (count == zeros) start = a;
      }
      orbit_points(start);
      break;
    }
    default: throw InvalidArgument("action '" + to_string(spec.kind) + "' is not available for matrix groups");
  }

  std::vector<Permutation> gens;
  for (const auto& g : group.generators) gens.push_back(action.induce(g));
  action.group_ = PermGroup(action.points_.size(), std::move(gens), seed);
  if (spec.kind != ActionKind::kVectors) action.transitive_ = action.group_.is_transitive();
  if (options.require_transitive && spec.kind != ActionKind::kVectors && !action.transitive_)
    throw NotTransitive("matrix action is intransitive");
  if (group.kind != ClassicalKind::kUser) {
    const ClassicalKind base = group.kind == ClassicalKind::kPGL   ? ClassicalKind::kGL
                               : group.kind == ClassicalKind::kPSL ? ClassicalKind::kSL
                                                                   : group.kind;
    const BigInt expected = classical_order(base, n, q) / kernel;
    if (action.group_.order() != expected)
      throw Error("generators of " + group.name() + " produced a group of order " + action.group_.order().str() +
                  ", expected " + expected.str());
  }
  return action;
}

}  // namespace fprlab
