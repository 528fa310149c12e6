#include "spinops/commutator.hpp"

#include "spinops/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace spinops {

namespace {

// Coefficient pattern of [F, gamma_m] for the decomposition of F.
OperatorDecomposition structural_term(const OperatorDecomposition& dec, const Matrix4r& g_lower,
                                      int m) {
  OperatorDecomposition out;
  out.u = Complex{0.0, 0.0};
  out.v = 2.0 * dec.v_cov(m);
  for (int k = 0; k < 4; ++k) {
    out.u_cov(k) = 4.0 * dec.w(k, m);
    out.v_cov(k) = 2.0 * dec.v * g_lower(m, k);
  }
  for (int p = 0; p < 4; ++p)
    for (int q = 0; q < 4; ++q)
      out.w(p, q) = dec.u_cov(p) * g_lower(q, m) - dec.u_cov(q) * g_lower(p, m);
  return out;
}

}  // namespace

double SolvabilityReport::max_residual() const {
  return std::max(std::max(identity_coeff, skew_symmetry),
                  std::max(v_scalar_consistency, w_pattern_consistency));
}

std::array<std::pair<const char*, double>, 4> SolvabilityReport::named_residuals() const {
  return {{{"identity_coeff", identity_coeff},
           {"skew_symmetry", skew_symmetry},
           {"v_scalar_consistency", v_scalar_consistency},
           {"w_pattern_consistency", w_pattern_consistency}}};
}

CommutatorRHS make_commutator_rhs(const std::array<Matrix4c, 4>& v_ops,
                                  const FrameContext& ctx) {
  CommutatorRHS rhs;
  rhs.v_ops = v_ops;
  for (int m = 0; m < 4; ++m) rhs.decs[m] = decompose(v_ops[m], ctx);
  return rhs;
}

CommutatorRHS commutator_map(const OperatorDecomposition& dec, const FrameContext& ctx) {
  const Matrix4c f = reconstruct(dec, ctx);

  std::array<Matrix4c, 4> v_ops;
  for (int m = 0; m < 4; ++m) {
    v_ops[m] = commutator(f, ctx.gamma_lower[m]);
    const Matrix4c structural = reconstruct(structural_term(dec, ctx.metric.lower, m), ctx);
    if (max_abs_diff(v_ops[m], structural) > 1e-10) {
      throw StructuralMismatch(
          "StructuralMismatch: direct and term-by-term commutator evaluations disagree");
    }
  }
  return make_commutator_rhs(v_ops, ctx);
}

SolvabilityReport check_solvable(const CommutatorRHS& rhs, const FrameContext& ctx, double tol) {
  const Matrix4r& g_lower = ctx.metric.lower;
  const Matrix4r& g_upper = ctx.metric.upper;
  const auto& decs = rhs.decs;

  SolvabilityReport report;
  report.tolerance = tol;

  for (int m = 0; m < 4; ++m)
    report.identity_coeff = std::max(report.identity_coeff, std::abs(decs[m].u));

  for (int m = 0; m < 4; ++m)
    for (int k = 0; k < 4; ++k)
      report.skew_symmetry =
          std::max(report.skew_symmetry, std::abs(decs[m].u_cov(k) + decs[k].u_cov(m)));

  // v~_mk = 2 v g_mk; the scalar is recovered by contraction with g^km,
  // using tr(g_lower g_upper) = 4.
  Complex v{0.0, 0.0};
  for (int m = 0; m < 4; ++m)
    for (int k = 0; k < 4; ++k) v += decs[m].v_cov(k) * g_upper(k, m);
  v /= 8.0;
  for (int m = 0; m < 4; ++m)
    for (int k = 0; k < 4; ++k)
      report.v_scalar_consistency = std::max(
          report.v_scalar_consistency, std::abs(decs[m].v_cov(k) - 2.0 * v * g_lower(m, k)));

  // w~_mpq = u_p g_qm - u_q g_pm; contracting with g^qm gives 3 u_p.
  Vector4c u_cov = Vector4c::Zero();
  for (int p = 0; p < 4; ++p) {
    Complex acc{0.0, 0.0};
    for (int m = 0; m < 4; ++m)
      for (int q = 0; q < 4; ++q) acc += decs[m].w(p, q) * g_upper(q, m);
    u_cov(p) = acc / 3.0;
  }
  for (int m = 0; m < 4; ++m)
    for (int p = 0; p < 4; ++p)
      for (int q = 0; q < 4; ++q) {
        const Complex expected = u_cov(p) * g_lower(q, m) - u_cov(q) * g_lower(p, m);
        report.w_pattern_consistency =
            std::max(report.w_pattern_consistency, std::abs(decs[m].w(p, q) - expected));
      }

  OperatorDecomposition recovered;
  recovered.u = Complex{0.0, 0.0};
  recovered.v = v;
  recovered.u_cov = u_cov;
  for (int m = 0; m < 4; ++m) recovered.v_cov(m) = decs[m].v / 2.0;
  Matrix4c w;
  for (int k = 0; k < 4; ++k)
    for (int m = 0; m < 4; ++m) w(k, m) = decs[m].u_cov(k) / 4.0;
  recovered.w = (w - w.transpose().eval()) / 2.0;
  report.recovered = recovered;

  report.solvable = report.max_residual() <= tol;
  return report;
}

SolveResult solve(const CommutatorRHS& rhs, const FrameContext& ctx, double tol) {
  SolveResult result;
  result.report = check_solvable(rhs, ctx, tol);
  if (!result.report.solvable) return result;

  const Matrix4c f0 = reconstruct(*result.report.recovered, ctx);
  double residual = 0.0;
  for (int m = 0; m < 4; ++m)
    residual = std::max(residual, max_abs_diff(commutator(f0, ctx.gamma_lower[m]), rhs.v_ops[m]));

  result.substitution_residual = residual;
  result.f0 = f0;
  return result;
}

}  // namespace spinops
