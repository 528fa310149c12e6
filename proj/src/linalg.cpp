#include "spinops/linalg.hpp"

namespace spinops {

Vector16c vectorize(const Matrix4c& m) {
  Vector16c v;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) v(4 * a + b) = m(a, b);
  return v;
}

Vector16c solve_linear_16(const std::array<Matrix4c, 16>& basis, const Matrix4c& target) {
  Eigen::Matrix<Complex, 16, 16> a;
  for (int j = 0; j < 16; ++j) a.col(j) = vectorize(basis[j]);

  const Eigen::Matrix<Complex, 16, 16> gram = a.adjoint() * a;
  Eigen::JacobiSVD<Eigen::Matrix<Complex, 16, 16>> svd(gram);
  if (svd.singularValues()(15) <= 1e-10) {
    throw SingularBasis("SingularBasis: Gram matrix rank-deficient beyond tolerance 1e-10");
  }

  return a.colPivHouseholderQr().solve(vectorize(target));
}

}  // namespace spinops
