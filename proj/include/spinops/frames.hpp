#pragma once

#include "spinops/types.hpp"

namespace spinops {

/// Totally antisymmetric symbol on indices 0..3; value +1 on (0,1,2,3),
/// sign of the permutation otherwise, 0 on repeated indices.
int levi_civita(int i, int j, int k, int m);

enum class Orientation { right, left };

/// Spatial metric in both index positions. lower * upper = identity;
/// the signature is (+,-,-,-) and det(lower) < 0.
struct MetricComponents {
  Matrix4r lower;  // g_ij
  Matrix4r upper;  // g^ij
};

/// Metric-induced totally antisymmetric rank-4 tensor, both index positions.
/// The sign convention ties the lower components to +sqrt(-det g) epsilon in
/// right frames and -sqrt(-det g) epsilon in left frames, the upper
/// components to the opposite sign.
struct VolumeTensor {
  Rank4 lower;  // omega_ijkm
  Rank4 upper;  // omega^ijkm
  Orientation orientation = Orientation::right;
};

/// A pair of basis changes relative to the canonical frames. Columns of each
/// matrix express the new frame vectors in canonical components. The spatial
/// and spinor parts are independent inputs; no compatibility between them is
/// enforced.
struct FrameChange {
  Matrix4r spatial = Matrix4r::Identity();  // L
  Matrix4c spinor = Matrix4c::Identity();   // S
};

/// All coordinate presentations of the basic fields in one frame pair.
/// Immutable after construction; safe to share across threads.
struct FrameContext {
  FrameChange change;
  MetricComponents metric;
  VolumeTensor volume;
  std::array<Matrix4c, 4> gamma_upper;  // gamma^k
  std::array<Matrix4c, 4> gamma_lower;  // gamma_k = g_kq gamma^q
  Matrix4c chirality;                   // H
  Matrix4c chirality_conj;              // conjugate-index counterpart of H
  Matrix4c spinor_metric_lower;         // d_ij
  Matrix4c spinor_metric_upper;         // d^ij
  Matrix4c spinor_metric_conj_lower;
  Matrix4c spinor_metric_conj_upper;
  Matrix4c dirac_form;  // D, row = spinor index, column = conjugate index
};

/// The canonically orthonormal chiral context: Minkowski metric, volume
/// tensor equal to the permutation symbol, and the standard matrices for
/// d, H, D and the four gamma operators.
FrameContext canonical_context();

/// Transforms every component array of the canonical context under the given
/// basis-change pair. Lower spatial indices contract with L, upper with
/// L^-1; lower spinor indices with S, upper with S^-1; conjugate spinor
/// indices use the complex conjugates of S / S^-1. Orientation is right iff
/// det L > 0 and fixes the volume-tensor sign.
/// Throws SingularFrameChange when |det L| <= 1e-10 or |det S| <= 1e-10.
FrameContext apply_frame_change(const FrameChange& change);

/// Four-fold index raise of a rank-4 tensor by the upper metric.
Rank4 raise_volume(const Rank4& lower, const MetricComponents& metric);

/// gamma_k = sum_q g_kq gamma^q evaluated in the given context.
std::array<Matrix4c, 4> lower_gamma(const FrameContext& ctx);

/// True when the context's frame change is exactly the identity pair.
bool is_canonical(const FrameContext& ctx);

}  // namespace spinops
