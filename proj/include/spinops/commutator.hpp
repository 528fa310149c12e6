#pragma once

#include "spinops/conversion.hpp"
#include "spinops/frames.hpp"

#include <array>
#include <optional>
#include <utility>

namespace spinops {

inline constexpr double kDefaultSolveTol = 1e-9;

/// Right-hand side of the equations [F, gamma_m] = V_m: the four operators
/// together with their cached decompositions. Build through
/// make_commutator_rhs or commutator_map so the cache never goes stale.
struct CommutatorRHS {
  std::array<Matrix4c, 4> v_ops;
  std::array<OperatorDecomposition, 4> decs;
};

CommutatorRHS make_commutator_rhs(const std::array<Matrix4c, 4>& v_ops, const FrameContext& ctx);

/// Evaluates V_m = [reconstruct(dec), gamma_m] two ways: directly as matrix
/// commutators and term by term through the coefficient pattern
///   u~_m = 0,  v~_m = 2 v_m,  u~_mk = 4 w_km,  v~_mk = 2 v g_mk,
///   w~_mpq = u_p g_qm - u_q g_pm.
/// Throws StructuralMismatch when the two routes disagree beyond 1e-10.
CommutatorRHS commutator_map(const OperatorDecomposition& dec, const FrameContext& ctx);

/// Solvability test outcome. The four named residuals measure how far the
/// decompositions of V_m sit from the solvable pattern; `recovered` holds
/// the candidate solution coefficients (with u = 0 by convention) and is
/// present whether or not the verdict is positive.
struct SolvabilityReport {
  bool solvable = false;
  double identity_coeff = 0.0;         // max_m |u~_m|
  double skew_symmetry = 0.0;          // max |u~_mk + u~_km|
  double v_scalar_consistency = 0.0;   // residual of v~_mk = 2 v g_mk
  double w_pattern_consistency = 0.0;  // residual of w~_mpq = u_p g_qm - u_q g_pm
  double tolerance = 0.0;
  std::optional<OperatorDecomposition> recovered;

  double max_residual() const;
  std::array<std::pair<const char*, double>, 4> named_residuals() const;
};

/// Coefficient-pattern solvability test. Unsolvable is a verdict, not an error.
SolvabilityReport check_solvable(const CommutatorRHS& rhs, const FrameContext& ctx,
                                 double tol = kDefaultSolveTol);

/// Result of solve. When solvable, f0 is the representative solution with
/// vanishing unit-operator coefficient, and every F = f0 + u 1 solves the
/// same equations.
struct SolveResult {
  std::optional<Matrix4c> f0;
  double substitution_residual = 0.0;  // max_m |[f0, gamma_m] - V_m| when solved
  SolvabilityReport report;

  static constexpr const char* family_note = "general solution F = F0 + u*1";
};

SolveResult solve(const CommutatorRHS& rhs, const FrameContext& ctx,
                  double tol = kDefaultSolveTol);

}  // namespace spinops
