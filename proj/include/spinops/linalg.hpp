#pragma once

#include "spinops/types.hpp"

namespace spinops {

template <class A, class B>
Matrix4c mat_mul(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  return a * b;
}

template <class A>
Complex trace(const Eigen::MatrixBase<A>& a) {
  return a.trace();
}

template <class A, class B>
Matrix4c commutator(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  return a * b - b * a;
}

template <class A, class B>
Matrix4c anticommutator(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  return a * b + b * a;
}

/// Max entrywise modulus; the residual metric used throughout.
template <class A>
double max_abs(const Eigen::MatrixBase<A>& a) {
  return a.cwiseAbs().maxCoeff();
}

template <class A, class B>
double max_abs_diff(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

/// Row-major flattening: component 4*a + b holds entry (a, b).
Vector16c vectorize(const Matrix4c& m);

/// Solves sum_j c_j basis[j] = target for the 16 coefficients c_j.
/// Throws SingularBasis when the Gram matrix of the basis is rank-deficient
/// beyond tolerance 1e-10.
Vector16c solve_linear_16(const std::array<Matrix4c, 16>& basis, const Matrix4c& target);

}  // namespace spinops
