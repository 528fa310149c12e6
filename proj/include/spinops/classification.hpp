#pragma once

#include "spinops/conversion.hpp"
#include "spinops/frames.hpp"

#include <utility>

namespace spinops {

inline constexpr double kDefaultClassifyTol = 1e-10;

enum class SymmetryClass { symmetric, skew, mixed };
enum class HermiticityClass { hermitian, antihermitian, mixed };

const char* to_string(SymmetryClass c);
const char* to_string(HermiticityClass c);

struct SymmetryVerdict {
  double symmetric_residual = 0.0;
  double skew_residual = 0.0;
  SymmetryClass classification = SymmetryClass::mixed;
};

struct HermiticityVerdict {
  double hermitian_residual = 0.0;
  double antihermitian_residual = 0.0;
  HermiticityClass classification = HermiticityClass::mixed;
};

/// Antisymmetric bilinear form sum_ab d_ab psi^a phi^b.
Complex d_bilinear(const Vector4c& psi, const Vector4c& phi, const FrameContext& ctx);

/// Sesquilinear form sum_ab D_ab conj(psi^b) phi^a, of signature (+,+,-,-).
Complex D_sesquilinear(const Vector4c& psi, const Vector4c& phi, const FrameContext& ctx);

/// Residuals of F^T d -+ d F; symmetric wins over skew when both pass.
SymmetryVerdict classify_symmetry(const Matrix4c& f, const FrameContext& ctx,
                                  double tol = kDefaultClassifyTol);

/// Residuals of D conj(F) -+ F^T D; hermitian wins over antihermitian when
/// both pass.
HermiticityVerdict classify_hermiticity(const Matrix4c& f, const FrameContext& ctx,
                                        double tol = kDefaultClassifyTol);

/// Coefficient-level symmetry test: symmetric iff u_k and w vanish, skew iff
/// u, v and v_k vanish.
SymmetryClass symmetry_criterion(const OperatorDecomposition& dec,
                                 double tol = kDefaultClassifyTol);

/// Coefficient-level Hermiticity test: hermitian iff u, u_k, v_k are real
/// while v and w are imaginary; antihermitian with the conditions flipped.
HermiticityClass hermiticity_criterion(const OperatorDecomposition& dec,
                                       double tol = kDefaultClassifyTol);

/// Splits gamma^p gamma^q into its symmetric part g^pq 1 and skew part
/// -(i/2) sum_rs H gamma_r gamma_s omega^rspq. The parts re-sum to the
/// product, and the split coincides with the hermitian/antihermitian one.
std::pair<Matrix4c, Matrix4c> split_gamma_pair(int p, int q, const FrameContext& ctx);

}  // namespace spinops
