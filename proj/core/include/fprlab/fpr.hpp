#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fprlab/classes.hpp"
#include "fprlab/matrix.hpp"

namespace fprlab {

/// |C_Omega(x)| / |Omega| for x in the permutation group G acting on its
/// own domain. Throws NotAMember when x is not in G.
Rational fpr_direct(const PermGroup& G, const Permutation& x);

/// |x^G cap H| / |x^G|: the fixed point ratio of the class C on the cosets
/// of H. Throws InvalidArgument unless H <= G.
Rational fpr_fusion(const PermGroup& G, const PermGroup& H, const ConjClass& C, const ClassOptions& options = {});

/// q^(d-n), d = dim of the fixed space of x on GF(q)^n: the fixed point
/// ratio of x on all q^n vectors.
Rational fpr_vectors(const FFMatrix& x);

struct FprRow {
  std::size_t class_index = 0;
  Permutation rep;
  std::uint64_t order = 1;
  BigInt size = 1;
  std::uint64_t fix = 0;
  Rational fpr;
};

struct FprReport {
  std::size_t degree = 0;
  BigInt group_order = 1;
  /// One row per class, in class-table order (order, size, rep).
  std::vector<FprRow> rows;
  /// Extremes over non-identity classes; trivial groups report 1 and 0.
  Rational max_fpr = 0, min_fpr = 1;
  std::uint64_t mu = 0;      // minimal degree
  std::uint64_t fixity = 0;  // degree - mu
  /// Largest fixed point count of an involution; 0 with has_involutions
  /// false when there are none.
  std::uint64_t involution_fixity = 0;
  bool has_involutions = false;
  bool has_derangement = false;
  /// Row index of the first derangement class.
  std::optional<std::size_t> derangement_witness;
  /// Largest fpr over prime-order classes; equals max_fpr (asserted by tests).
  Rational max_prime_fpr = 0;
};

/// Fixed point counts for every class of the table, computed from the
/// class representatives. The table's group is the acting group.
FprReport fpr_report(const ClassTable& table);

/// Socle names exempt from the 4/(3q) bound.
std::vector<std::string> default_43q_exceptions();

struct Check43q {
  Rational bound;
  Rational max_fpr;
  bool bound_holds = false;
  /// The socle is one of the exceptions (the bound may fail).
  bool exempt = false;
  /// bound_holds || exempt.
  bool ok = false;
  /// Rows (report indices) with fpr > bound.
  std::vector<std::size_t> failures;
};

/// Tests max fpr <= 4/(3q) over non-identity classes. `socle` names the
/// socle in the style of default_43q_exceptions(); a socle of the form
/// "PSL2(...)" is always exempt.
Check43q check_43q(const FprReport& report, std::uint32_t q, const std::string& socle,
                   const std::vector<std::string>& exceptions = default_43q_exceptions());

}  // namespace fprlab
