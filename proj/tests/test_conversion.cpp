#include "spinops/conversion.hpp"

#include "spinops/linalg.hpp"
#include "spinops/rng.hpp"

#include <doctest.h>

#include "oracles.hpp"

using namespace spinops;

namespace {

double decomposition_distance(const OperatorDecomposition& a, const OperatorDecomposition& b) {
  double res = std::max(std::abs(a.u - b.u), std::abs(a.v - b.v));
  res = std::max(res, max_abs_diff(a.u_cov, b.u_cov));
  res = std::max(res, max_abs_diff(a.v_cov, b.v_cov));
  res = std::max(res, max_abs_diff(a.w, b.w));
  return res;
}

}  // namespace

TEST_CASE("reconstruct basis members") {
  const FrameContext ctx = canonical_context();

  OperatorDecomposition unit;
  unit.u = Complex{1.0, 0.0};
  CHECK(max_abs_diff(reconstruct(unit, ctx), Matrix4c::Identity()) == 0.0);

  OperatorDecomposition gamma0;
  gamma0.u_cov(0) = Complex{1.0, 0.0};
  CHECK(max_abs_diff(reconstruct(gamma0, ctx), ctx.gamma_upper[0]) == 0.0);
}

TEST_CASE("reconstruct rejects a non-antisymmetric w") {
  OperatorDecomposition dec;
  dec.w(0, 1) = Complex{1.0, 0.0};  // missing the mirrored entry
  CHECK_THROWS_AS(reconstruct(dec, canonical_context()), NonSkewW);
}

TEST_CASE("reconstruct agrees with the 16-term basis expansion") {
  const FrameContext ctx = canonical_context();
  SplitMix64 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const OperatorDecomposition dec = random_decomposition(rng);
    const Matrix4c f = reconstruct(dec, ctx);
    const OperatorDecomposition expanded = oracle::basis_expansion_decomposition(f, ctx);
    CHECK(decomposition_distance(dec, expanded) < 1e-10);
  }
}

TEST_CASE("decompose on the canonical basis members") {
  const FrameContext ctx = canonical_context();

  const OperatorDecomposition unit = decompose(Matrix4c::Identity(), ctx);
  CHECK(unit.u == Complex{1.0, 0.0});
  CHECK(std::abs(unit.v) == 0.0);
  CHECK(max_abs(unit.u_cov) == 0.0);
  CHECK(max_abs(unit.v_cov) == 0.0);
  CHECK(max_abs(unit.w) == 0.0);

  const OperatorDecomposition chirality = decompose(ctx.chirality, ctx);
  CHECK(chirality.v == Complex{1.0, 0.0});
  CHECK(std::abs(chirality.u) == 0.0);
  CHECK(max_abs(chirality.u_cov) == 0.0);
  CHECK(max_abs(chirality.v_cov) == 0.0);
  CHECK(max_abs(chirality.w) == 0.0);
}

TEST_CASE("decompose of gamma^0 gamma^1 splits across both w triangles") {
  const FrameContext ctx = canonical_context();
  const Matrix4c f = ctx.gamma_upper[0] * ctx.gamma_upper[1];
  const OperatorDecomposition dec = decompose(f, ctx);

  // The independent basis-expansion oracle fixes the 1/2: the full p,q sum
  // picks the product up once from each triangle.
  const OperatorDecomposition expanded = oracle::basis_expansion_decomposition(f, ctx);
  CHECK(std::abs(expanded.w(0, 1) - Complex{0.5, 0.0}) < 1e-12);

  CHECK(dec.w(0, 1) == Complex{0.5, 0.0});
  CHECK(dec.w(1, 0) == Complex{-0.5, 0.0});
  CHECK(std::abs(dec.u) == 0.0);
  CHECK(std::abs(dec.v) == 0.0);
  CHECK(max_abs(dec.u_cov) == 0.0);
  CHECK(max_abs(dec.v_cov) == 0.0);
  for (int p = 0; p < 4; ++p)
    for (int q = 0; q < 4; ++q) {
      if ((p == 0 && q == 1) || (p == 1 && q == 0)) continue;
      CHECK(std::abs(dec.w(p, q)) == 0.0);
    }
}

TEST_CASE("decompose agrees with the basis-expansion oracle on random operators") {
  SplitMix64 rng(42);
  const FrameContext canonical = canonical_context();
  const FrameContext random_ctx = apply_frame_change(random_frame_change(rng));
  for (const FrameContext* ctx : {&canonical, &random_ctx}) {
    for (int trial = 0; trial < 20; ++trial) {
      const Matrix4c f = random_operator(rng);
      CHECK(decomposition_distance(decompose(f, *ctx),
                                   oracle::basis_expansion_decomposition(f, *ctx)) < 1e-9);
    }
  }
}

TEST_CASE("round trip: decompose after reconstruct") {
  SplitMix64 rng(43);
  const FrameContext canonical = canonical_context();
  const FrameContext random_ctx = apply_frame_change(random_frame_change(rng));
  for (const FrameContext* ctx : {&canonical, &random_ctx}) {
    for (int trial = 0; trial < 50; ++trial) {
      const OperatorDecomposition dec = random_decomposition(rng);
      CHECK(decomposition_distance(decompose(reconstruct(dec, *ctx), *ctx), dec) < 1e-10);
    }
  }
}

TEST_CASE("decompose emits an exactly antisymmetric w") {
  SplitMix64 rng(47);
  const FrameContext ctx = apply_frame_change(random_frame_change(rng));
  for (int trial = 0; trial < 20; ++trial) {
    const OperatorDecomposition dec = decompose(random_operator(rng), ctx);
    CHECK(max_abs(dec.w + dec.w.transpose()) == 0.0);
  }
}

TEST_CASE("round trip: reconstruct after decompose") {
  SplitMix64 rng(44);
  const FrameContext canonical = canonical_context();
  const FrameContext random_ctx = apply_frame_change(random_frame_change(rng));
  for (const FrameContext* ctx : {&canonical, &random_ctx}) {
    for (int trial = 0; trial < 50; ++trial) {
      const Matrix4c f = random_operator(rng);
      CHECK(max_abs_diff(reconstruct(decompose(f, *ctx), *ctx), f) < 1e-10);
    }
  }
}

TEST_CASE("decompose is linear") {
  SplitMix64 rng(45);
  const FrameContext ctx = canonical_context();
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix4c f = random_operator(rng);
    const Matrix4c g = random_operator(rng);
    const Complex alpha = rng.complex_uniform(-1.0, 1.0);
    const Complex beta = rng.complex_uniform(-1.0, 1.0);

    const OperatorDecomposition combined = decompose(alpha * f + beta * g, ctx);
    const OperatorDecomposition df = decompose(f, ctx);
    const OperatorDecomposition dg = decompose(g, ctx);

    OperatorDecomposition expected;
    expected.u = alpha * df.u + beta * dg.u;
    expected.v = alpha * df.v + beta * dg.v;
    expected.u_cov = alpha * df.u_cov + beta * dg.u_cov;
    expected.v_cov = alpha * df.v_cov + beta * dg.v_cov;
    expected.w = alpha * df.w + beta * dg.w;
    CHECK(decomposition_distance(combined, expected) < 1e-10);
  }
}

TEST_CASE("decompose is frame covariant") {
  SplitMix64 rng(46);
  const FrameContext canonical = canonical_context();
  for (int trial = 0; trial < 20; ++trial) {
    const FrameChange change = random_frame_change(rng);
    const FrameContext ctx = apply_frame_change(change);
    const Matrix4c f = random_operator(rng);

    const Matrix4c f_new = change.spinor.inverse() * f * change.spinor;
    const OperatorDecomposition in_canonical = decompose(f, canonical);
    const OperatorDecomposition in_new = decompose(f_new, ctx);

    CHECK(std::abs(in_new.u - in_canonical.u) < 1e-9);
    CHECK(std::abs(in_new.v - in_canonical.v) < 1e-9);

    const Matrix4r& l = change.spatial;
    for (int k = 0; k < 4; ++k) {
      Complex u_expected{0.0, 0.0};
      Complex v_expected{0.0, 0.0};
      for (int i = 0; i < 4; ++i) {
        u_expected += l(i, k) * in_canonical.u_cov(i);
        v_expected += l(i, k) * in_canonical.v_cov(i);
      }
      CHECK(std::abs(in_new.u_cov(k) - u_expected) < 1e-9);
      CHECK(std::abs(in_new.v_cov(k) - v_expected) < 1e-9);
    }
    for (int p = 0; p < 4; ++p)
      for (int q = 0; q < 4; ++q) {
        Complex expected{0.0, 0.0};
        for (int i = 0; i < 4; ++i)
          for (int j = 0; j < 4; ++j) expected += l(i, p) * l(j, q) * in_canonical.w(i, j);
        CHECK(std::abs(in_new.w(p, q) - expected) < 1e-9);
      }
  }
}
