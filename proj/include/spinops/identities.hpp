#pragma once

#include "spinops/frames.hpp"

#include <string>
#include <vector>

namespace spinops {

inline constexpr double kDefaultIdentityTol = 1e-9;

struct IdentityReport {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// H^2 = 1 for both the chirality operator and its conjugate counterpart.
IdentityReport check_chirality_square(const FrameContext& ctx, double tol = kDefaultIdentityTol);

/// The three anticommutator families {gamma^p, gamma^q} = 2 g^pq 1,
/// {gamma^p, gamma_q} = 2 delta^p_q 1, {gamma_p, gamma_q} = 2 g_pq 1.
IdentityReport check_clifford(const FrameContext& ctx, double tol = kDefaultIdentityTol);

/// H as the volume-weighted quadruple product of gamma operators, in both
/// index positions; in the canonical context also the plain quadruple
/// products i gamma^0 gamma^1 gamma^2 gamma^3 and -i gamma_0..gamma_3.
IdentityReport check_chirality_product(const FrameContext& ctx, double tol = kDefaultIdentityTol);

/// {H, gamma^k} = 0 and {H, gamma_k} = 0.
IdentityReport check_chirality_anticommute(const FrameContext& ctx,
                                           double tol = kDefaultIdentityTol);

/// [H, gamma^k gamma^q] = 0 and [H, gamma_k gamma_q] = 0.
IdentityReport check_pair_commute(const FrameContext& ctx, double tol = kDefaultIdentityTol);

/// {H, gamma^p gamma^k gamma^q} = 0 and the lower-index family.
IdentityReport check_triple_anticommute(const FrameContext& ctx,
                                        double tol = kDefaultIdentityTol);

/// The product expansions of double and triple gamma products (with and
/// without a leading H) over the basis {1, H, gamma, H gamma, gamma gamma},
/// plus the mixed-index triple product expansion.
IdentityReport check_product_identities(const FrameContext& ctx,
                                        double tol = kDefaultIdentityTol);

/// Vanishing traces of single, H-single, H-double and triple products, the
/// double-product traces 4 g^pq / 4 g_pq / 4 delta^p_q, and the
/// quadruple-product trace formula.
IdentityReport check_traces(const FrameContext& ctx, double tol = kDefaultIdentityTol);

/// Every check above, in deterministic order.
std::vector<IdentityReport> run_all(const FrameContext& ctx, double tol = kDefaultIdentityTol);

}  // namespace spinops
