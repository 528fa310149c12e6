#include "spinops/conversion.hpp"

#include "spinops/linalg.hpp"

namespace spinops {

Matrix4c reconstruct(const OperatorDecomposition& dec, const FrameContext& ctx) {
  if (max_abs(dec.w + dec.w.transpose()) > 1e-12) {
    throw NonSkewW("NonSkewW: w tensor is not antisymmetric");
  }

  Matrix4c f = dec.u * Matrix4c::Identity() + dec.v * ctx.chirality;
  for (int k = 0; k < 4; ++k) {
    f += ctx.gamma_upper[k] * dec.u_cov(k);
    f += ctx.chirality * ctx.gamma_upper[k] * dec.v_cov(k);
  }
  for (int p = 0; p < 4; ++p)
    for (int q = 0; q < 4; ++q) {
      if (dec.w(p, q) == Complex{0.0, 0.0}) continue;
      f += ctx.gamma_upper[p] * ctx.gamma_upper[q] * dec.w(p, q);
    }
  return f;
}

OperatorDecomposition decompose(const Matrix4c& f, const FrameContext& ctx) {
  const Matrix4c hf = ctx.chirality * f;

  OperatorDecomposition dec;
  dec.u = f.trace() / 4.0;
  dec.v = hf.trace() / 4.0;
  for (int k = 0; k < 4; ++k) {
    dec.u_cov(k) = (ctx.gamma_lower[k] * f).trace() / 4.0;
    dec.v_cov(k) = (ctx.gamma_lower[k] * hf).trace() / 4.0;
  }
  for (int p = 0; p < 4; ++p)
    for (int q = p + 1; q < 4; ++q) {
      const Complex qp = (ctx.gamma_lower[q] * ctx.gamma_lower[p] * f).trace();
      const Complex pq = (ctx.gamma_lower[p] * ctx.gamma_lower[q] * f).trace();
      dec.w(p, q) = (qp - pq) / 16.0;
      dec.w(q, p) = -dec.w(p, q);
    }
  return dec;
}

}  // namespace spinops
