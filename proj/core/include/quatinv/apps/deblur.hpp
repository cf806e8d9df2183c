#pragma once

#include "quatinv/apps/blur.hpp"
#include "quatinv/apps/image.hpp"
#include "quatinv/geninv.hpp"

namespace quatinv::apps {

struct DeblurOptions {
  PinvAlgorithm algorithm = PinvAlgorithm::svd_crep;
  double rank_rtol = 0.0;
};

struct QuaternionRestoration {
  QMatrix xhat;          ///< A^+ B, real part included
  ColorImage restored;   ///< i, j, k parts clamped to [0, 1]
};

/// X_hat = A^+ B for the quaternion blur model.
QuaternionRestoration deblur_quaternion(const QMatrix& a, const QMatrix& b,
                                        const DeblurOptions& opt = {});

/// Solves the real block system [X_R; X_G; X_B] = A_R^+ [B_i; B_j; B_k] with a
/// real SVD pseudoinverse (same relative rank rule) and clamps the channels.
ColorImage real_block_restore(const BlurOperator& op, const QMatrix& b, double rank_rtol = 0.0);

}  // namespace quatinv::apps
