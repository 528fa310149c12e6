#include "spinops/frames.hpp"

#include <cmath>

namespace spinops {

namespace {

constexpr Complex kOne{1.0, 0.0};
constexpr Complex kI{0.0, 1.0};

Matrix4r minkowski_metric() {
  Matrix4r g = Matrix4r::Zero();
  g(0, 0) = 1.0;
  g(1, 1) = -1.0;
  g(2, 2) = -1.0;
  g(3, 3) = -1.0;
  return g;
}

Matrix4c canonical_spinor_metric_lower() {
  Matrix4c d = Matrix4c::Zero();
  d(0, 1) = kOne;
  d(1, 0) = -kOne;
  d(2, 3) = -kOne;
  d(3, 2) = kOne;
  return d;
}

Matrix4c canonical_spinor_metric_upper() {
  Matrix4c d = Matrix4c::Zero();
  d(0, 1) = -kOne;
  d(1, 0) = kOne;
  d(2, 3) = kOne;
  d(3, 2) = -kOne;
  return d;
}

Matrix4c canonical_chirality() {
  Matrix4c h = Matrix4c::Zero();
  h(0, 0) = kOne;
  h(1, 1) = kOne;
  h(2, 2) = -kOne;
  h(3, 3) = -kOne;
  return h;
}

Matrix4c canonical_dirac_form() {
  Matrix4c d = Matrix4c::Zero();
  d(0, 2) = kOne;
  d(1, 3) = kOne;
  d(2, 0) = kOne;
  d(3, 1) = kOne;
  return d;
}

std::array<Matrix4c, 4> canonical_gamma_upper() {
  std::array<Matrix4c, 4> g;
  for (auto& m : g) m = Matrix4c::Zero();

  g[0](0, 2) = kOne;
  g[0](1, 3) = kOne;
  g[0](2, 0) = kOne;
  g[0](3, 1) = kOne;

  g[1](0, 3) = -kOne;
  g[1](1, 2) = -kOne;
  g[1](2, 1) = kOne;
  g[1](3, 0) = kOne;

  g[2](0, 3) = kI;
  g[2](1, 2) = -kI;
  g[2](2, 1) = -kI;
  g[2](3, 0) = kI;

  g[3](0, 2) = -kOne;
  g[3](1, 3) = kOne;
  g[3](2, 0) = kOne;
  g[3](3, 1) = -kOne;

  return g;
}

VolumeTensor make_volume(const MetricComponents& metric, Orientation orientation) {
  const double sign = orientation == Orientation::right ? 1.0 : -1.0;
  const double scale_lower = sign * std::sqrt(-metric.lower.determinant());
  const double scale_upper = -sign * std::sqrt(-metric.upper.determinant());

  VolumeTensor volume;
  volume.orientation = orientation;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int m = 0; m < 4; ++m) {
          const int eps = levi_civita(i, j, k, m);
          if (eps == 0) continue;
          volume.lower(i, j, k, m) = scale_lower * eps;
          volume.upper(i, j, k, m) = scale_upper * eps;
        }
  return volume;
}

}  // namespace

int levi_civita(int i, int j, int k, int m) {
  const int idx[4] = {i, j, k, m};
  int sign = 1;
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) {
      if (idx[a] == idx[b]) return 0;
      if (idx[a] > idx[b]) sign = -sign;
    }
  return sign;
}

std::array<Matrix4c, 4> lower_gamma(const FrameContext& ctx) {
  std::array<Matrix4c, 4> lowered;
  for (int k = 0; k < 4; ++k) {
    Matrix4c acc = Matrix4c::Zero();
    for (int q = 0; q < 4; ++q) acc += ctx.metric.lower(k, q) * ctx.gamma_upper[q];
    lowered[k] = acc;
  }
  return lowered;
}

FrameContext canonical_context() {
  FrameContext ctx;
  ctx.change = FrameChange{};
  ctx.metric.lower = minkowski_metric();
  ctx.metric.upper = minkowski_metric();
  ctx.volume = make_volume(ctx.metric, Orientation::right);
  ctx.gamma_upper = canonical_gamma_upper();
  ctx.gamma_lower = lower_gamma(ctx);
  ctx.chirality = canonical_chirality();
  ctx.chirality_conj = canonical_chirality();
  ctx.spinor_metric_lower = canonical_spinor_metric_lower();
  ctx.spinor_metric_upper = canonical_spinor_metric_upper();
  ctx.spinor_metric_conj_lower = canonical_spinor_metric_lower();
  ctx.spinor_metric_conj_upper = canonical_spinor_metric_upper();
  ctx.dirac_form = canonical_dirac_form();
  return ctx;
}

FrameContext apply_frame_change(const FrameChange& change) {
  const double det_spatial = change.spatial.determinant();
  if (std::abs(det_spatial) <= 1e-10) {
    throw SingularFrameChange("SingularFrameChange: spatial matrix is not invertible");
  }
  if (std::abs(change.spinor.determinant()) <= 1e-10) {
    throw SingularFrameChange("SingularFrameChange: spinor matrix is not invertible");
  }

  const FrameContext can = canonical_context();
  const Matrix4r& l = change.spatial;
  const Matrix4r l_inv = l.inverse();
  const Matrix4c& s = change.spinor;
  const Matrix4c s_inv = s.inverse();
  const Matrix4c s_conj = s.conjugate();
  const Matrix4c s_conj_inv = s_inv.conjugate();

  FrameContext ctx;
  ctx.change = change;
  ctx.metric.lower = l.transpose() * can.metric.lower * l;
  ctx.metric.upper = l_inv * can.metric.upper * l_inv.transpose();
  ctx.volume =
      make_volume(ctx.metric, det_spatial > 0 ? Orientation::right : Orientation::left);

  for (int k = 0; k < 4; ++k) {
    Matrix4c acc = Matrix4c::Zero();
    for (int q = 0; q < 4; ++q) acc += l_inv(k, q) * can.gamma_upper[q];
    ctx.gamma_upper[k] = s_inv * acc * s;
  }
  ctx.gamma_lower = lower_gamma(ctx);

  ctx.chirality = s_inv * can.chirality * s;
  ctx.chirality_conj = s_conj_inv * can.chirality_conj * s_conj;
  ctx.spinor_metric_lower = s.transpose() * can.spinor_metric_lower * s;
  ctx.spinor_metric_upper = s_inv * can.spinor_metric_upper * s_inv.transpose();
  ctx.spinor_metric_conj_lower = s_conj.transpose() * can.spinor_metric_conj_lower * s_conj;
  ctx.spinor_metric_conj_upper =
      s_conj_inv * can.spinor_metric_conj_upper * s_conj_inv.transpose();
  ctx.dirac_form = s.transpose() * can.dirac_form * s_conj;
  return ctx;
}

Rank4 raise_volume(const Rank4& lower, const MetricComponents& metric) {
  const Matrix4r& gu = metric.upper;
  Rank4 raised;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int m = 0; m < 4; ++m) {
          double acc = 0.0;
          for (int p = 0; p < 4; ++p)
            for (int q = 0; q < 4; ++q)
              for (int r = 0; r < 4; ++r)
                for (int s = 0; s < 4; ++s)
                  acc += lower(p, q, r, s) * gu(p, i) * gu(q, j) * gu(r, k) * gu(s, m);
          raised(i, j, k, m) = acc;
        }
  return raised;
}

bool is_canonical(const FrameContext& ctx) {
  return ctx.change.spatial == Matrix4r::Identity() && ctx.change.spinor == Matrix4c::Identity();
}

}  // namespace spinops
