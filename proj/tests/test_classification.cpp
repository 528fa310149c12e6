#include "spinops/classification.hpp"

#include "spinops/linalg.hpp"
#include "spinops/rng.hpp"

#include <doctest.h>

#include "oracles.hpp"

using namespace spinops;

TEST_CASE("d_bilinear and D_sesquilinear") {
  const FrameContext ctx = canonical_context();
  SplitMix64 rng(51);

  for (int trial = 0; trial < 20; ++trial) {
    Vector4c psi;
    Vector4c phi;
    for (int k = 0; k < 4; ++k) {
      psi(k) = rng.complex_uniform(-1.0, 1.0);
      phi(k) = rng.complex_uniform(-1.0, 1.0);
    }
    CHECK(std::abs(d_bilinear(psi, psi, ctx)) < 1e-14);
    CHECK(std::abs(D_sesquilinear(psi, phi, ctx) -
                   std::conj(D_sesquilinear(phi, psi, ctx))) < 1e-13);
  }

  Vector4c e1 = Vector4c::Zero();
  Vector4c e3 = Vector4c::Zero();
  e1(0) = Complex{1.0, 0.0};
  e3(2) = Complex{1.0, 0.0};
  CHECK(D_sesquilinear(e1, e3, ctx) == Complex{1.0, 0.0});
}

TEST_CASE("hermiticity of D survives frame changes") {
  SplitMix64 rng(52);
  for (int trial = 0; trial < 20; ++trial) {
    const FrameContext ctx = apply_frame_change(random_frame_change(rng));
    Vector4c psi;
    Vector4c phi;
    for (int k = 0; k < 4; ++k) {
      psi(k) = rng.complex_uniform(-1.0, 1.0);
      phi(k) = rng.complex_uniform(-1.0, 1.0);
    }
    CHECK(std::abs(D_sesquilinear(psi, phi, ctx) -
                   std::conj(D_sesquilinear(phi, psi, ctx))) < 1e-12);
  }
}

TEST_CASE("classify_symmetry on the basis table") {
  const FrameContext ctx = canonical_context();

  CHECK(classify_symmetry(Matrix4c::Identity(), ctx).classification ==
        SymmetryClass::symmetric);
  CHECK(classify_symmetry(ctx.chirality, ctx).classification == SymmetryClass::symmetric);
  for (int k = 0; k < 4; ++k) {
    CHECK(classify_symmetry(ctx.gamma_upper[k], ctx).classification == SymmetryClass::skew);
    CHECK(classify_symmetry(ctx.gamma_lower[k], ctx).classification == SymmetryClass::skew);
    CHECK(classify_symmetry(ctx.chirality * ctx.gamma_upper[k], ctx).classification ==
          SymmetryClass::symmetric);
    CHECK(classify_symmetry(ctx.chirality * ctx.gamma_lower[k], ctx).classification ==
          SymmetryClass::symmetric);
  }
  // Residual-zero in the canonical frame.
  CHECK(classify_symmetry(Matrix4c::Identity(), ctx).symmetric_residual == 0.0);
  CHECK(classify_symmetry(ctx.gamma_upper[0], ctx).skew_residual == 0.0);
}

TEST_CASE("classify_hermiticity on the basis table") {
  const FrameContext ctx = canonical_context();

  CHECK(classify_hermiticity(Matrix4c::Identity(), ctx).classification ==
        HermiticityClass::hermitian);
  CHECK(classify_hermiticity(ctx.chirality, ctx).classification ==
        HermiticityClass::antihermitian);
  for (int k = 0; k < 4; ++k) {
    CHECK(classify_hermiticity(ctx.gamma_upper[k], ctx).classification ==
          HermiticityClass::hermitian);
    CHECK(classify_hermiticity(ctx.gamma_lower[k], ctx).classification ==
          HermiticityClass::hermitian);
    CHECK(classify_hermiticity(ctx.chirality * ctx.gamma_upper[k], ctx).classification ==
          HermiticityClass::hermitian);
    CHECK(classify_hermiticity(ctx.chirality * ctx.gamma_lower[k], ctx).classification ==
          HermiticityClass::hermitian);
  }
  CHECK(classify_hermiticity(Matrix4c::Identity(), ctx).hermitian_residual == 0.0);
  CHECK(classify_hermiticity(ctx.chirality, ctx).antihermitian_residual == 0.0);

  // Multiplying a hermitian operator by i flips it to antihermitian.
  CHECK(classify_hermiticity(imag_unit * ctx.gamma_upper[0], ctx).classification ==
        HermiticityClass::antihermitian);
}

TEST_CASE("gamma^0 gamma^1 has vanishing symmetric part where g^01 = 0") {
  const FrameContext ctx = canonical_context();
  const Matrix4c f = ctx.gamma_upper[0] * ctx.gamma_upper[1];

  // Projection through the d-transpose oracle: symmetric part g^01 1 = 0,
  // skew part the whole product, so the verdict is skew, not mixed.
  const Matrix4c sym_part = 0.5 * (f + oracle::d_transpose(f, ctx));
  const Matrix4c skew_part = 0.5 * (f - oracle::d_transpose(f, ctx));
  CHECK(max_abs(sym_part) < 1e-14);
  CHECK(max_abs_diff(skew_part, f) < 1e-14);
  CHECK(classify_symmetry(f, ctx).classification == SymmetryClass::skew);

  // A generic frame makes g^01 nonzero and the product genuinely mixed.
  SplitMix64 rng(55);
  const FrameContext generic = apply_frame_change(random_frame_change(rng));
  REQUIRE(std::abs(generic.metric.upper(0, 1)) > 1e-3);
  const Matrix4c g = generic.gamma_upper[0] * generic.gamma_upper[1];
  CHECK(classify_symmetry(g, generic).classification == SymmetryClass::mixed);
}

TEST_CASE("criteria on handcrafted decompositions") {
  OperatorDecomposition unit_only;
  unit_only.u = Complex{1.0, 0.0};
  CHECK(symmetry_criterion(unit_only) == SymmetryClass::symmetric);

  OperatorDecomposition gamma_only;
  gamma_only.u_cov(0) = Complex{1.0, 0.0};
  CHECK(symmetry_criterion(gamma_only) == SymmetryClass::skew);

  OperatorDecomposition both;
  both.u = Complex{1.0, 0.0};
  both.u_cov(0) = Complex{1.0, 0.0};
  CHECK(symmetry_criterion(both) == SymmetryClass::mixed);

  OperatorDecomposition hermitian;
  hermitian.u = Complex{1.0, 0.0};
  hermitian.v = Complex{0.0, 1.0};
  CHECK(hermiticity_criterion(hermitian) == HermiticityClass::hermitian);

  OperatorDecomposition antihermitian;
  antihermitian.u = Complex{0.0, 1.0};
  CHECK(hermiticity_criterion(antihermitian) == HermiticityClass::antihermitian);

  OperatorDecomposition mixed;
  mixed.u = Complex{1.0, 1.0};
  CHECK(hermiticity_criterion(mixed) == HermiticityClass::mixed);
}

TEST_CASE("matrix-level and coefficient-level verdicts agree") {
  SplitMix64 rng(53);
  const FrameContext canonical = canonical_context();
  const FrameContext random_ctx = apply_frame_change(random_frame_change(rng));

  for (const FrameContext* ctx : {&canonical, &random_ctx}) {
    // Generic operators.
    for (int trial = 0; trial < 50; ++trial) {
      const Matrix4c f = random_operator(rng);
      const OperatorDecomposition dec = decompose(f, *ctx);
      CHECK(classify_symmetry(f, *ctx).classification == symmetry_criterion(dec));
      CHECK(classify_hermiticity(f, *ctx).classification == hermiticity_criterion(dec));
    }

    // Constructed pure-symmetric and pure-skew operators.
    for (int trial = 0; trial < 25; ++trial) {
      OperatorDecomposition sym = random_decomposition(rng);
      sym.u_cov.setZero();
      sym.w.setZero();
      const Matrix4c f_sym = reconstruct(sym, *ctx);
      CHECK(classify_symmetry(f_sym, *ctx).classification == SymmetryClass::symmetric);
      CHECK(symmetry_criterion(decompose(f_sym, *ctx)) == SymmetryClass::symmetric);

      OperatorDecomposition skew = random_decomposition(rng);
      skew.u = skew.v = Complex{0.0, 0.0};
      skew.v_cov.setZero();
      const Matrix4c f_skew = reconstruct(skew, *ctx);
      CHECK(classify_symmetry(f_skew, *ctx).classification == SymmetryClass::skew);
      CHECK(symmetry_criterion(decompose(f_skew, *ctx)) == SymmetryClass::skew);
    }

    // Constructed hermitian and antihermitian operators.
    for (int trial = 0; trial < 25; ++trial) {
      OperatorDecomposition dec = random_decomposition(rng);
      dec.u = Complex{dec.u.real(), 0.0};
      dec.v = Complex{0.0, dec.v.imag()};
      for (int k = 0; k < 4; ++k) {
        dec.u_cov(k) = Complex{dec.u_cov(k).real(), 0.0};
        dec.v_cov(k) = Complex{dec.v_cov(k).real(), 0.0};
      }
      dec.w = imag_unit * (dec.w.real().cast<Complex>().eval());
      const Matrix4c f = reconstruct(dec, *ctx);
      CHECK(classify_hermiticity(f, *ctx).classification == HermiticityClass::hermitian);
      CHECK(hermiticity_criterion(decompose(f, *ctx)) == HermiticityClass::hermitian);

      const Matrix4c g = imag_unit * f;
      CHECK(classify_hermiticity(g, *ctx).classification == HermiticityClass::antihermitian);
      CHECK(hermiticity_criterion(decompose(g, *ctx)) == HermiticityClass::antihermitian);
    }
  }
}

TEST_CASE("split_gamma_pair in the canonical frame") {
  const FrameContext ctx = canonical_context();

  const auto [sym00, skew00] = split_gamma_pair(0, 0, ctx);
  CHECK(max_abs_diff(sym00, Matrix4c::Identity()) == 0.0);
  CHECK(max_abs(skew00) == 0.0);

  const auto [sym01, skew01] = split_gamma_pair(0, 1, ctx);
  CHECK(max_abs(sym01) == 0.0);
  CHECK(max_abs_diff(skew01, ctx.gamma_upper[0] * ctx.gamma_upper[1]) == 0.0);
}

TEST_CASE("split_gamma_pair re-sums, classifies purely, and matches both projections") {
  SplitMix64 rng(54);
  for (int trial = 0; trial < 20; ++trial) {
    const FrameContext ctx = apply_frame_change(random_frame_change(rng));
    for (int p = 0; p < 4; ++p)
      for (int q = 0; q < 4; ++q) {
        const auto [sym, skew] = split_gamma_pair(p, q, ctx);
        const Matrix4c product = ctx.gamma_upper[p] * ctx.gamma_upper[q];
        CHECK(max_abs_diff(sym + skew, product) < 1e-9);
        // Purity through the defining residuals; the diagonal pairs have a
        // zero skew part, which any enum verdict would misrepresent.
        CHECK(classify_symmetry(sym, ctx).symmetric_residual < 1e-9);
        CHECK(classify_symmetry(skew, ctx).skew_residual < 1e-9);
        CHECK(classify_hermiticity(sym, ctx).hermitian_residual < 1e-9);
        CHECK(classify_hermiticity(skew, ctx).antihermitian_residual < 1e-9);

        // Independent projections: d-transpose for symmetry, D-adjoint for
        // hermiticity. Both must reproduce the same two parts.
        const Matrix4c sym_proj = 0.5 * (product + oracle::d_transpose(product, ctx));
        const Matrix4c herm_proj = 0.5 * (product + oracle::D_adjoint(product, ctx));
        CHECK(max_abs_diff(sym, sym_proj) < 1e-9);
        CHECK(max_abs_diff(sym_proj, herm_proj) < 1e-9);
      }
  }
}
