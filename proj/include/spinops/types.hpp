#pragma once

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <stdexcept>

namespace spinops {

using Complex = std::complex<double>;

template <class Scalar>
using Matrix4 = Eigen::Matrix<Scalar, 4, 4>;
template <class Scalar>
using Vector4 = Eigen::Matrix<Scalar, 4, 1>;

using Matrix4c = Matrix4<Complex>;
using Matrix4r = Matrix4<double>;
using Vector4c = Vector4<Complex>;
using Vector16c = Eigen::Matrix<Complex, 16, 1>;

inline constexpr Complex imag_unit{0.0, 1.0};

/// Rank-4 real tensor over spatial indices 0..3. Value-initialized to zero.
class Rank4 {
 public:
  Rank4() : data_{} {}

  double& operator()(int i, int j, int k, int m) { return data_[flat(i, j, k, m)]; }
  double operator()(int i, int j, int k, int m) const { return data_[flat(i, j, k, m)]; }

 private:
  static int flat(int i, int j, int k, int m) { return ((i * 4 + j) * 4 + k) * 4 + m; }

  std::array<double, 256> data_;
};

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Frame-change matrix fails the invertibility precondition.
struct SingularFrameChange : Error {
  using Error::Error;
};

/// Basis handed to solve_linear_16 is rank-deficient.
struct SingularBasis : Error {
  using Error::Error;
};

/// Decomposition carries a w tensor that is not antisymmetric.
struct NonSkewW : Error {
  using Error::Error;
};

/// The direct and term-by-term commutator evaluations disagree.
struct StructuralMismatch : Error {
  using Error::Error;
};

/// Input document is malformed or violates a field invariant.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace spinops
