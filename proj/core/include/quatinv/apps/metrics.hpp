#pragma once

#include <Eigen/Dense>

#include "quatinv/apps/image.hpp"

namespace quatinv::apps {

/// PSNR reported for identical images.
inline constexpr double kPsnrCap = 999.0;

struct RestorationMetrics {
  double psnr = 0.0;  ///< dB, peak 1
  double ssim = 0.0;
  double rr = 0.0;
  Eigen::Matrix3d corr_orig = Eigen::Matrix3d::Zero();
  Eigen::Matrix3d corr_restored = Eigen::Matrix3d::Zero();
};

/// 10 log10(1 / MSE) with the MSE averaged over all three channels.
double psnr(const ColorImage& x, const ColorImage& y);

/// Mean over channels of the windowed SSIM (11 x 11 Gaussian window,
/// sigma 1.5, K1 = 0.01, K2 = 0.03, peak 1), averaged over valid positions.
/// Images narrower than 11 pixels use the largest odd window that fits.
double ssim(const ColorImage& x, const ColorImage& y);

/// ||Y - X||_F / ||X||_F over the stacked channels; ParameterError if X = 0.
double relative_residual(const ColorImage& x, const ColorImage& y);

/// Pearson correlation of the vectorized R, G, B channels. A constant channel
/// has correlation 1 with itself and 0 with the others.
Eigen::Matrix3d channel_correlation(const ColorImage& img);

/// Largest absolute entry of the difference of two correlation matrices.
double correlation_deviation(const Eigen::Matrix3d& a, const Eigen::Matrix3d& b);

/// All metrics of `restored` against the ground truth `x`.
RestorationMetrics compute_metrics(const ColorImage& x, const ColorImage& restored);

}  // namespace quatinv::apps
