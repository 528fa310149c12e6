#pragma once

#include "spinops/frames.hpp"
#include "spinops/types.hpp"

namespace spinops {

/// Spatial data equivalent to one spin-operator: two scalars, two covectors
/// and one antisymmetric rank-2 tensor. w stores both triangles and must
/// satisfy w(p,q) = -w(q,p) exactly.
struct OperatorDecomposition {
  Complex u{0.0, 0.0};
  Complex v{0.0, 0.0};
  Vector4c u_cov = Vector4c::Zero();
  Vector4c v_cov = Vector4c::Zero();
  Matrix4c w = Matrix4c::Zero();
};

/// Synthesizes the operator
///   F = u 1 + v H + sum_k gamma^k u_k + sum_k H gamma^k v_k
///       + sum_{p,q} gamma^p gamma^q w_pq
/// in the given context. Throws NonSkewW when the antisymmetry of w is
/// violated beyond 1e-12.
Matrix4c reconstruct(const OperatorDecomposition& dec, const FrameContext& ctx);

/// Inverse of reconstruct via trace extraction:
///   u    = tr(F) / 4
///   v    = tr(H F) / 4
///   u_k  = tr(gamma_k F) / 4
///   v_k  = tr(gamma_k H F) / 4
///   w_pq = tr(gamma_q gamma_p F) / 16 - tr(gamma_p gamma_q F) / 16
/// The returned w is antisymmetric by construction.
OperatorDecomposition decompose(const Matrix4c& f, const FrameContext& ctx);

}  // namespace spinops
