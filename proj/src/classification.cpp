#include "spinops/classification.hpp"

#include "spinops/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace spinops {

namespace {

// Largest offending component for one of the two hermiticity condition
// sets. Hermitian: u, u_k, v_k real while v, w are imaginary. The
// antihermitian set swaps real and imaginary everywhere.
double hermiticity_offenders(const OperatorDecomposition& dec, bool hermitian) {
  double res = 0.0;
  const auto re = [](Complex z) { return std::abs(z.real()); };
  const auto im = [](Complex z) { return std::abs(z.imag()); };

  res = std::max(res, hermitian ? im(dec.u) : re(dec.u));
  res = std::max(res, hermitian ? re(dec.v) : im(dec.v));
  for (int k = 0; k < 4; ++k) {
    res = std::max(res, hermitian ? im(dec.u_cov(k)) : re(dec.u_cov(k)));
    res = std::max(res, hermitian ? im(dec.v_cov(k)) : re(dec.v_cov(k)));
  }
  for (int p = 0; p < 4; ++p)
    for (int q = 0; q < 4; ++q)
      res = std::max(res, hermitian ? re(dec.w(p, q)) : im(dec.w(p, q)));
  return res;
}

}  // namespace

const char* to_string(SymmetryClass c) {
  switch (c) {
    case SymmetryClass::symmetric: return "symmetric";
    case SymmetryClass::skew: return "skew";
    default: return "mixed";
  }
}

const char* to_string(HermiticityClass c) {
  switch (c) {
    case HermiticityClass::hermitian: return "hermitian";
    case HermiticityClass::antihermitian: return "antihermitian";
    default: return "mixed";
  }
}

Complex d_bilinear(const Vector4c& psi, const Vector4c& phi, const FrameContext& ctx) {
  Complex acc{0.0, 0.0};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) acc += ctx.spinor_metric_lower(a, b) * psi(a) * phi(b);
  return acc;
}

Complex D_sesquilinear(const Vector4c& psi, const Vector4c& phi, const FrameContext& ctx) {
  Complex acc{0.0, 0.0};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) acc += ctx.dirac_form(a, b) * std::conj(psi(b)) * phi(a);
  return acc;
}

SymmetryVerdict classify_symmetry(const Matrix4c& f, const FrameContext& ctx, double tol) {
  const Matrix4c& d = ctx.spinor_metric_lower;
  const Matrix4c lhs = f.transpose() * d;
  const Matrix4c rhs = d * f;

  SymmetryVerdict verdict;
  verdict.symmetric_residual = max_abs_diff(lhs, rhs);
  verdict.skew_residual = max_abs(lhs + rhs);
  if (verdict.symmetric_residual <= tol)
    verdict.classification = SymmetryClass::symmetric;
  else if (verdict.skew_residual <= tol)
    verdict.classification = SymmetryClass::skew;
  else
    verdict.classification = SymmetryClass::mixed;
  return verdict;
}

HermiticityVerdict classify_hermiticity(const Matrix4c& f, const FrameContext& ctx, double tol) {
  const Matrix4c& big_d = ctx.dirac_form;
  const Matrix4c lhs = big_d * f.conjugate();
  const Matrix4c rhs = f.transpose() * big_d;

  HermiticityVerdict verdict;
  verdict.hermitian_residual = max_abs_diff(lhs, rhs);
  verdict.antihermitian_residual = max_abs(lhs + rhs);
  if (verdict.hermitian_residual <= tol)
    verdict.classification = HermiticityClass::hermitian;
  else if (verdict.antihermitian_residual <= tol)
    verdict.classification = HermiticityClass::antihermitian;
  else
    verdict.classification = HermiticityClass::mixed;
  return verdict;
}

SymmetryClass symmetry_criterion(const OperatorDecomposition& dec, double tol) {
  double sym_offenders = 0.0;
  double skew_offenders = std::max(std::abs(dec.u), std::abs(dec.v));
  for (int k = 0; k < 4; ++k) {
    sym_offenders = std::max(sym_offenders, std::abs(dec.u_cov(k)));
    skew_offenders = std::max(skew_offenders, std::abs(dec.v_cov(k)));
  }
  sym_offenders = std::max(sym_offenders, max_abs(dec.w));

  if (sym_offenders <= tol) return SymmetryClass::symmetric;
  if (skew_offenders <= tol) return SymmetryClass::skew;
  return SymmetryClass::mixed;
}

HermiticityClass hermiticity_criterion(const OperatorDecomposition& dec, double tol) {
  if (hermiticity_offenders(dec, true) <= tol) return HermiticityClass::hermitian;
  if (hermiticity_offenders(dec, false) <= tol) return HermiticityClass::antihermitian;
  return HermiticityClass::mixed;
}

std::pair<Matrix4c, Matrix4c> split_gamma_pair(int p, int q, const FrameContext& ctx) {
  const Matrix4c sym = ctx.metric.upper(p, q) * Matrix4c::Identity();

  Matrix4c pair_sum = Matrix4c::Zero();
  for (int r = 0; r < 4; ++r)
    for (int s = 0; s < 4; ++s) {
      if (ctx.volume.upper(r, s, p, q) == 0.0) continue;
      pair_sum += ctx.chirality * ctx.gamma_lower[r] * ctx.gamma_lower[s] *
                  ctx.volume.upper(r, s, p, q);
    }
  const Matrix4c skew = -(imag_unit / 2.0) * pair_sum;
  return {sym, skew};
}

}  // namespace spinops
