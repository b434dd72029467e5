#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "fprlab/actions.hpp"
#include "fprlab/matrix.hpp"
#include "fprlab/perm_group.hpp"

namespace fprlab {

enum class ClassicalKind { kGL, kSL, kPGL, kPSL, kSp, kUser };

std::string to_string(ClassicalKind kind);

/// A matrix group given by generators. For PGL and PSL the generators are
/// those of GL and SL; the projective quotient appears only in actions on
/// projective points and subspaces.
struct MatrixGroup {
  FieldPtr field;
  std::size_t n = 0;
  ClassicalKind kind = ClassicalKind::kUser;
  std::vector<FFMatrix> generators;

  bool projective() const { return kind == ClassicalKind::kPGL || kind == ClassicalKind::kPSL; }
  std::string name() const;
};

/// Order of the named group from its formula. For PGL and PSL this is the
/// order of the projective group.
BigInt classical_order(ClassicalKind kind, std::size_t n, std::uint32_t q);

/// Standard generators: elementary transvections x_{i,i+1}(a), x_{i+1,i}(a)
/// for a in a GF(p)-basis of GF(q), plus diag(w,1,...,1) for GL/PGL; for Sp
/// (n = 2m), symplectic transvections v -> v + a B(v,u) u for u in
/// {e_i, f_i, e_i+e_j, e_i+f_j}. The Gram matrix of B is [[0,I],[-I,0]]
/// in the basis e_1..e_m, f_1..f_m.
MatrixGroup build_classical(ClassicalKind kind, std::size_t n, std::uint32_t q);

/// Gram matrix of the standard alternating form on GF(q)^(2m).
FFMatrix symplectic_form(FieldPtr field, std::size_t n);

/// True iff g J g^T = J (the row-vector form of preserving B).
bool preserves_symplectic_form(const FFMatrix& g);

/// A matrix group acting on vectors, projective points, an orbit of
/// k-subspaces, or quadratic forms polarising to the symplectic form.
class MatrixAction {
 public:
  const MatrixGroup& source() const { return source_; }
  const PermGroup& group() const { return group_; }
  std::size_t degree() const { return points_.size(); }
  ActionKind kind() const { return kind_; }
  /// The vectors action fixes 0, so it is never transitive.
  bool transitive() const { return transitive_; }

  Permutation induce(const FFMatrix& g) const;
  std::string label(Point omega) const;
  /// Point index of a vector (vectors, projective) or coefficient vector
  /// (forms); subspaces take a flattened basis.
  Point point_index(const std::vector<FieldElem>& description) const;

  /// For the vectors action: the matrix whose induced permutation is p.
  FFMatrix matrix_from_vector_perm(const Permutation& p) const;

 private:
  friend MatrixAction act_on(const MatrixGroup&, const ActionSpec&, const RealizeOptions&, std::uint64_t);

  MatrixAction(MatrixGroup source) : source_(std::move(source)), group_(PermGroup::trivial(1)) {}

  std::vector<FieldElem> canonical(const std::vector<FieldElem>& description) const;
  std::vector<FieldElem> image(const std::vector<FieldElem>& point, const FFMatrix& g, const FFMatrix& g_inv) const;
  std::string key(const std::vector<FieldElem>& v) const;

  MatrixGroup source_;
  PermGroup group_;
  ActionKind kind_ = ActionKind::kVectors;
  bool transitive_ = false;
  std::size_t k_ = 0;
  std::vector<std::vector<FieldElem>> points_;
  std::unordered_map<std::string, Point> index_;
};

/// Realizes the action; the permutation group's order is checked against
/// the order formula for the source group modulo the kernel of the action.
/// Throws CapExceeded for oversized domains and InvalidArgument for targets
/// the group cannot act on.
MatrixAction act_on(const MatrixGroup& group, const ActionSpec& spec, const RealizeOptions& options = {},
                    std::uint64_t seed = kDefaultSeed);

/// Symplectic transvection v -> v + a B(v,u) u.
FFMatrix symplectic_transvection(FieldPtr field, const std::vector<FieldElem>& u, FieldElem a);

/// Elementary transvection I + a E_{ij}.
FFMatrix elementary_transvection(FieldPtr field, std::size_t n, std::size_t i, std::size_t j, FieldElem a);

}  // namespace fprlab
