#include "spinops/rng.hpp"

#include <cmath>

namespace spinops {

FrameChange random_frame_change(SplitMix64& rng) {
  FrameChange change;
  do {
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) change.spatial(i, j) = rng.uniform(-1.0, 1.0);
  } while (std::abs(change.spatial.determinant()) < 0.1);
  do {
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) change.spinor(i, j) = rng.complex_uniform(-1.0, 1.0);
  } while (std::abs(change.spinor.determinant()) < 0.1);
  return change;
}

Matrix4c random_operator(SplitMix64& rng) {
  Matrix4c f;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) f(i, j) = rng.complex_uniform(-1.0, 1.0);
  return f;
}

OperatorDecomposition random_decomposition(SplitMix64& rng) {
  OperatorDecomposition dec;
  dec.u = rng.complex_uniform(-1.0, 1.0);
  dec.v = rng.complex_uniform(-1.0, 1.0);
  for (int k = 0; k < 4; ++k) {
    dec.u_cov(k) = rng.complex_uniform(-1.0, 1.0);
    dec.v_cov(k) = rng.complex_uniform(-1.0, 1.0);
  }
  Matrix4c raw;
  for (int p = 0; p < 4; ++p)
    for (int q = 0; q < 4; ++q) raw(p, q) = rng.complex_uniform(-1.0, 1.0);
  dec.w = (raw - raw.transpose().eval()) / 2.0;
  return dec;
}

}  // namespace spinops
