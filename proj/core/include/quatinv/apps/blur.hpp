#pragma once

#include <cstddef>

#include "quatinv/apps/image.hpp"
#include "quatinv/qmatrix.hpp"

namespace quatinv::apps {

struct BlurParams {
  std::size_t p = 8;
  std::size_t q = 8;
  double sigma = 3.0;  ///< Gaussian width of the T0 band
  std::size_t r = 3;   ///< T0 half bandwidth
  std::size_t s = 3;   ///< T1 half bandwidth, box height 1 / (2s - 1)
};

/// A = A1 i + A2 j + A3 k with A1 = T0_blur (x) T1_blur and A2 = A3 = -0.5 A1.
struct BlurOperator {
  BlurParams params;
  RMatrix t0_blur;  ///< p x p, exp(-(i-j)^2 / (2 sigma^2)) / (sigma sqrt(2 pi)) for |i-j| <= r
  RMatrix t1_blur;  ///< q x q, 1 / (2s - 1) for |i-j| <= s
  RMatrix a1;       ///< pq x pq
  RMatrix a2;       ///< -0.5 A1
  RMatrix a3;       ///< -0.5 A1
  QMatrix a;

  std::size_t size() const { return a.rows(); }
};

/// Throws ParameterError for p or q = 0, sigma <= 0 or s = 0.
BlurOperator build_blur(const BlurParams& params);

/// B = A X with X = R i + G j + B k. Throws DimensionError unless the image
/// height equals p q.
QMatrix blur(const BlurOperator& op, const ColorImage& x);

/// Real block operator [[0, -A3, A2], [A3, 0, -A1], [-A2, A1, 0]] (3h x 3h).
RMatrix real_block_operator(const BlurOperator& op);

}  // namespace quatinv::apps
