#include "spinops/identities.hpp"

#include "spinops/linalg.hpp"

#include <algorithm>

namespace spinops {

namespace {

IdentityReport make_report(std::string name, double residual, double tol) {
  IdentityReport report;
  report.name = std::move(name);
  report.residual = residual;
  report.tolerance = tol;
  report.pass = residual <= tol;
  return report;
}

const Matrix4c kIdentity = Matrix4c::Identity();

}  // namespace

IdentityReport check_chirality_square(const FrameContext& ctx, double tol) {
  double res = max_abs_diff(mat_mul(ctx.chirality, ctx.chirality), kIdentity);
  res = std::max(res, max_abs_diff(mat_mul(ctx.chirality_conj, ctx.chirality_conj), kIdentity));
  return make_report("chirality-square", res, tol);
}

IdentityReport check_clifford(const FrameContext& ctx, double tol) {
  double res = 0.0;
  for (int p = 0; p < 4; ++p)
    for (int q = 0; q < 4; ++q) {
      res = std::max(res, max_abs_diff(anticommutator(ctx.gamma_upper[p], ctx.gamma_upper[q]),
                                       2.0 * ctx.metric.upper(p, q) * kIdentity));
      const double delta = p == q ? 1.0 : 0.0;
      res = std::max(res, max_abs_diff(anticommutator(ctx.gamma_upper[p], ctx.gamma_lower[q]),
                                       2.0 * delta * kIdentity));
      res = std::max(res, max_abs_diff(anticommutator(ctx.gamma_lower[p], ctx.gamma_lower[q]),
                                       2.0 * ctx.metric.lower(p, q) * kIdentity));
    }
  return make_report("clifford-anticommutators", res, tol);
}

IdentityReport check_chirality_product(const FrameContext& ctx, double tol) {
  Matrix4c upper_sum = Matrix4c::Zero();
  Matrix4c lower_sum = Matrix4c::Zero();
  for (int p = 0; p < 4; ++p)
    for (int q = 0; q < 4; ++q)
      for (int k = 0; k < 4; ++k)
        for (int m = 0; m < 4; ++m) {
          if (ctx.volume.lower(p, q, k, m) != 0.0) {
            upper_sum += ctx.volume.lower(p, q, k, m) * ctx.gamma_upper[p] *
                         ctx.gamma_upper[q] * ctx.gamma_upper[k] * ctx.gamma_upper[m];
          }
          if (ctx.volume.upper(p, q, k, m) != 0.0) {
            lower_sum += ctx.volume.upper(p, q, k, m) * ctx.gamma_lower[p] *
                         ctx.gamma_lower[q] * ctx.gamma_lower[k] * ctx.gamma_lower[m];
          }
        }
  double res = max_abs_diff(ctx.chirality, (imag_unit / 24.0) * upper_sum);
  res = std::max(res, max_abs_diff(ctx.chirality, (imag_unit / 24.0) * lower_sum));

  if (is_canonical(ctx)) {
    const Matrix4c plain_upper = imag_unit * ctx.gamma_upper[0] * ctx.gamma_upper[1] *
                                 ctx.gamma_upper[2] * ctx.gamma_upper[3];
    const Matrix4c plain_lower = -imag_unit * ctx.gamma_lower[0] * ctx.gamma_lower[1] *
                                 ctx.gamma_lower[2] * ctx.gamma_lower[3];
    res = std::max(res, max_abs_diff(ctx.chirality, plain_upper));
    res = std::max(res, max_abs_diff(ctx.chirality, plain_lower));
  }
  return make_report("chirality-volume-product", res, tol);
}

IdentityReport check_chirality_anticommute(const FrameContext& ctx, double tol) {
  double res = 0.0;
  for (int k = 0; k < 4; ++k) {
    res = std::max(res, max_abs(anticommutator(ctx.chirality, ctx.gamma_upper[k])));
    res = std::max(res, max_abs(anticommutator(ctx.chirality, ctx.gamma_lower[k])));
  }
  return make_report("chirality-gamma-anticommute", res, tol);
}

IdentityReport check_pair_commute(const FrameContext& ctx, double tol) {
  double res = 0.0;
  for (int k = 0; k < 4; ++k)
    for (int q = 0; q < 4; ++q) {
      res = std::max(res, max_abs(commutator(
                              ctx.chirality, ctx.gamma_upper[k] * ctx.gamma_upper[q])));
      res = std::max(res, max_abs(commutator(
                              ctx.chirality, ctx.gamma_lower[k] * ctx.gamma_lower[q])));
    }
  return make_report("chirality-pair-commute", res, tol);
}

IdentityReport check_triple_anticommute(const FrameContext& ctx, double tol) {
  double res = 0.0;
  for (int p = 0; p < 4; ++p)
    for (int k = 0; k < 4; ++k)
      for (int q = 0; q < 4; ++q) {
        res = std::max(res, max_abs(anticommutator(
                                ctx.chirality,
                                ctx.gamma_upper[p] * ctx.gamma_upper[k] * ctx.gamma_upper[q])));
        res = std::max(res, max_abs(anticommutator(
                                ctx.chirality,
                                ctx.gamma_lower[p] * ctx.gamma_lower[k] * ctx.gamma_lower[q])));
      }
  return make_report("chirality-triple-anticommute", res, tol);
}

IdentityReport check_product_identities(const FrameContext& ctx, double tol) {
  const Matrix4c& h = ctx.chirality;
  const auto& gu = ctx.gamma_upper;
  const auto& gl = ctx.gamma_lower;
  const Matrix4r& g_up = ctx.metric.upper;
  const Matrix4r& g_lo = ctx.metric.lower;
  double res = 0.0;

  // Double products: H gamma gamma and plain gamma gamma against the
  // volume-weighted pair sums.
  for (int p = 0; p < 4; ++p)
    for (int q = 0; q < 4; ++q) {
      Matrix4c pair_lower = Matrix4c::Zero();  // sum_rs gamma_r gamma_s omega^rspq
      Matrix4c pair_upper = Matrix4c::Zero();  // sum_rs gamma^r gamma^s omega_rspq
      for (int r = 0; r < 4; ++r)
        for (int s = 0; s < 4; ++s) {
          if (ctx.volume.upper(r, s, p, q) != 0.0)
            pair_lower += gl[r] * gl[s] * ctx.volume.upper(r, s, p, q);
          if (ctx.volume.lower(r, s, p, q) != 0.0)
            pair_upper += gu[r] * gu[s] * ctx.volume.lower(r, s, p, q);
        }

      res = std::max(res, max_abs_diff(
                              h * gu[p] * gu[q],
                              g_up(p, q) * h - (imag_unit / 2.0) * pair_lower));
      res = std::max(res, max_abs_diff(
                              h * gl[p] * gl[q],
                              g_lo(p, q) * h - (imag_unit / 2.0) * pair_upper));
      res = std::max(res, max_abs_diff(
                              gu[p] * gu[q],
                              g_up(p, q) * kIdentity - (imag_unit / 2.0) * h * pair_lower));
      res = std::max(res, max_abs_diff(
                              gl[p] * gl[q],
                              g_lo(p, q) * kIdentity - (imag_unit / 2.0) * h * pair_upper));
    }

  // Triple products, with and without a leading H.
  for (int p = 0; p < 4; ++p)
    for (int q = 0; q < 4; ++q)
      for (int r = 0; r < 4; ++r) {
        Matrix4c tail_upper = Matrix4c::Zero();  // sum_s omega^pqrs H gamma_s
        Matrix4c tail_lower = Matrix4c::Zero();  // sum_s omega_pqrs H gamma^s
        Matrix4c vec_upper = Matrix4c::Zero();   // sum_s omega^pqrs gamma_s
        Matrix4c vec_lower = Matrix4c::Zero();   // sum_s omega_pqrs gamma^s
        for (int s = 0; s < 4; ++s) {
          if (ctx.volume.upper(p, q, r, s) != 0.0) {
            tail_upper += ctx.volume.upper(p, q, r, s) * h * gl[s];
            vec_upper += ctx.volume.upper(p, q, r, s) * gl[s];
          }
          if (ctx.volume.lower(p, q, r, s) != 0.0) {
            tail_lower += ctx.volume.lower(p, q, r, s) * h * gu[s];
            vec_lower += ctx.volume.lower(p, q, r, s) * gu[s];
          }
        }

        res = std::max(res, max_abs_diff(
                                gu[p] * gu[q] * gu[r],
                                g_up(p, q) * gu[r] + g_up(q, r) * gu[p] - g_up(p, r) * gu[q] +
                                    imag_unit * tail_upper));
        res = std::max(res, max_abs_diff(
                                gl[p] * gl[q] * gl[r],
                                g_lo(p, q) * gl[r] + g_lo(q, r) * gl[p] - g_lo(p, r) * gl[q] +
                                    imag_unit * tail_lower));
        res = std::max(res, max_abs_diff(
                                h * gu[p] * gu[q] * gu[r],
                                g_up(p, q) * h * gu[r] + g_up(q, r) * h * gu[p] -
                                    g_up(p, r) * h * gu[q] + imag_unit * vec_upper));
        res = std::max(res, max_abs_diff(
                                h * gl[p] * gl[q] * gl[r],
                                g_lo(p, q) * h * gl[r] + g_lo(q, r) * h * gl[p] -
                                    g_lo(p, r) * h * gl[q] + imag_unit * vec_lower));

        // Mixed triple product with the last index lowered.
        Matrix4c mixed_tail = Matrix4c::Zero();  // sum_mn omega^pqmn g_mr H gamma_n
        for (int m = 0; m < 4; ++m)
          for (int n = 0; n < 4; ++n) {
            if (ctx.volume.upper(p, q, m, n) != 0.0)
              mixed_tail += ctx.volume.upper(p, q, m, n) * g_lo(m, r) * h * gl[n];
          }
        const double delta_qr = q == r ? 1.0 : 0.0;
        const double delta_pr = p == r ? 1.0 : 0.0;
        res = std::max(res, max_abs_diff(
                                gu[p] * gu[q] * gl[r],
                                g_up(p, q) * gl[r] + delta_qr * gu[p] - delta_pr * gu[q] +
                                    imag_unit * mixed_tail));
      }

  return make_report("gamma-product-expansions", res, tol);
}

IdentityReport check_traces(const FrameContext& ctx, double tol) {
  const Matrix4c& h = ctx.chirality;
  const auto& gu = ctx.gamma_upper;
  const auto& gl = ctx.gamma_lower;
  double res = 0.0;

  for (int k = 0; k < 4; ++k) {
    res = std::max(res, std::abs(gu[k].trace()));
    res = std::max(res, std::abs(gl[k].trace()));
    res = std::max(res, std::abs((h * gu[k]).trace()));
    res = std::max(res, std::abs((h * gl[k]).trace()));
  }

  for (int p = 0; p < 4; ++p)
    for (int q = 0; q < 4; ++q) {
      const double delta = p == q ? 1.0 : 0.0;
      res = std::max(res, std::abs((gu[p] * gu[q]).trace() - 4.0 * ctx.metric.upper(p, q)));
      res = std::max(res, std::abs((gl[p] * gl[q]).trace() - 4.0 * ctx.metric.lower(p, q)));
      res = std::max(res, std::abs((gu[p] * gl[q]).trace() - 4.0 * delta));
      res = std::max(res, std::abs((h * gu[p] * gu[q]).trace()));
      res = std::max(res, std::abs((h * gl[p] * gl[q]).trace()));
      res = std::max(res, std::abs((h * gu[p] * gl[q]).trace()));
    }

  for (int p = 0; p < 4; ++p)
    for (int q = 0; q < 4; ++q)
      for (int r = 0; r < 4; ++r) {
        res = std::max(res, std::abs((gu[p] * gu[q] * gu[r]).trace()));
        res = std::max(res, std::abs((gl[p] * gl[q] * gl[r]).trace()));
        res = std::max(res, std::abs((h * gu[p] * gu[q] * gu[r]).trace()));
        res = std::max(res, std::abs((h * gl[p] * gl[q] * gl[r]).trace()));
      }

  for (int p = 0; p < 4; ++p)
    for (int q = 0; q < 4; ++q)
      for (int r = 0; r < 4; ++r)
        for (int s = 0; s < 4; ++s) {
          const double delta_qr = q == r ? 1.0 : 0.0;
          const double delta_ps = p == s ? 1.0 : 0.0;
          const double delta_pr = p == r ? 1.0 : 0.0;
          const double delta_qs = q == s ? 1.0 : 0.0;
          const Complex expected = 4.0 * ctx.metric.upper(p, q) * ctx.metric.lower(r, s) +
                                   4.0 * delta_qr * delta_ps - 4.0 * delta_pr * delta_qs;
          res = std::max(res, std::abs((gu[p] * gu[q] * gl[r] * gl[s]).trace() - expected));
        }

  return make_report("trace-formulas", res, tol);
}

std::vector<IdentityReport> run_all(const FrameContext& ctx, double tol) {
  return {
      check_chirality_square(ctx, tol),
      check_clifford(ctx, tol),
      check_chirality_product(ctx, tol),
      check_chirality_anticommute(ctx, tol),
      check_pair_commute(ctx, tol),
      check_triple_anticommute(ctx, tol),
      check_product_identities(ctx, tol),
      check_traces(ctx, tol),
  };
}

}  // namespace spinops
