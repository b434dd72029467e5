#include "fprlab/fpr.hpp"

#include <algorithm>

namespace fprlab {

Rational fpr_direct(const PermGroup& G, const Permutation& x) {
  if (!G.contains(x)) throw NotAMember("element is not in the acting group");
  return Rational(static_cast<long long>(x.num_fixed_points()), static_cast<long long>(G.degree()));
}

Rational fpr_fusion(const PermGroup& G, const PermGroup& H, const ConjClass& C, const ClassOptions& options) {
  const std::uint64_t count = fusion_count(G, H, C, options);
  return Rational(BigInt(count), C.size);
}

Rational fpr_vectors(const FFMatrix& x) {
  if (!x.is_invertible()) throw InvalidArgument("fpr on vectors needs an invertible matrix");
  const std::size_t d = fixed_space_dim(x);
  BigInt denominator = 1;
  for (std::size_t i = d; i < x.n(); ++i) denominator *= x.F().q();
  return Rational(BigInt(1), denominator);
}

FprReport fpr_report(const ClassTable& table) {
  FprReport report;
  const PermGroup& G = table.group();
  report.degree = G.degree();
  report.group_order = G.order();
  bool any = false;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const ConjClass& c = table[i];
    FprRow row;
    row.class_index = i;
    row.rep = c.rep;
    row.order = c.order;
    row.size = c.size;
    row.fix = c.rep.num_fixed_points();
    row.fpr = Rational(static_cast<long long>(row.fix), static_cast<long long>(report.degree));
    if (c.order > 1) {
      if (!any || row.fpr > report.max_fpr) report.max_fpr = row.fpr;
      if (!any || row.fpr < report.min_fpr) report.min_fpr = row.fpr;
      any = true;
      if (row.fix == 0 && !report.has_derangement) {
        report.has_derangement = true;
        report.derangement_witness = report.rows.size();
      }
      if (c.order == 2) {
        report.involution_fixity = report.has_involutions ? std::max(report.involution_fixity, row.fix) : row.fix;
        report.has_involutions = true;
      }
      if (is_prime(c.order) && row.fpr > report.max_prime_fpr) report.max_prime_fpr = row.fpr;
    }
    report.rows.push_back(std::move(row));
  }
  if (!any) {
    report.max_fpr = 1;
    report.min_fpr = 0;
    report.mu = 0;
    report.fixity = report.degree;
    return report;
  }
  const Rational moved = Rational(static_cast<long long>(report.degree)) * (1 - report.max_fpr);
  report.mu = static_cast<std::uint64_t>(numerator(moved));
  report.fixity = report.degree - report.mu;
  return report;
}

std::vector<std::string> default_43q_exceptions() { return {"PSL4(2)", "PSp4(3)", "POmega4-(3)"}; }

Check43q check_43q(const FprReport& report, std::uint32_t q, const std::string& socle,
                   const std::vector<std::string>& exceptions) {
  if (q < 2) throw InvalidArgument("field size must be at least 2");
  Check43q result;
  result.bound = Rational(4, 3 * static_cast<long long>(q));
  result.max_fpr = report.max_fpr;
  for (std::size_t i = 0; i < report.rows.size(); ++i)
    if (report.rows[i].order > 1 && report.rows[i].fpr > result.bound) result.failures.push_back(i);
  result.bound_holds = result.failures.empty();
  result.exempt = socle.rfind("PSL2(", 0) == 0 ||
                  std::find(exceptions.begin(), exceptions.end(), socle) != exceptions.end();
  result.ok = result.bound_holds || result.exempt;
  return result;
}

}  // namespace fprlab
