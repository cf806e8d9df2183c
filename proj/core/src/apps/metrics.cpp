#include "quatinv/apps/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "quatinv/errors.hpp"

namespace quatinv::apps {

namespace {

void require_same(const ColorImage& x, const ColorImage& y, const char* what) {
  if (x.height != y.height || x.width != y.width) {
    throw DimensionError(std::string(what) + ": images are " + shape_string(x.height, x.width) +
                         " and " + shape_string(y.height, y.width));
  }
}

Eigen::MatrixXd gaussian_window(Eigen::Index size, double sigma) {
  Eigen::VectorXd g(size);
  const double c = 0.5 * static_cast<double>(size - 1);
  for (Eigen::Index i = 0; i < size; ++i) {
    const double d = static_cast<double>(i) - c;
    g(i) = std::exp(-d * d / (2.0 * sigma * sigma));
  }
  g /= g.sum();
  return g * g.transpose();
}

// Mean SSIM map of one channel over all positions where the window fits.
double ssim_channel(const RMatrix& x, const RMatrix& y, const Eigen::MatrixXd& win) {
  constexpr double c1 = 0.01 * 0.01;
  constexpr double c2 = 0.03 * 0.03;
  const Eigen::Index k = win.rows();
  const Eigen::Index nr = x.rows() - k + 1;
  const Eigen::Index nc = x.cols() - k + 1;
  double total = 0.0;
  for (Eigen::Index i = 0; i < nr; ++i) {
    for (Eigen::Index j = 0; j < nc; ++j) {
      const auto px = x.block(i, j, k, k);
      const auto py = y.block(i, j, k, k);
      const double mx = (win.array() * px.array()).sum();
      const double my = (win.array() * py.array()).sum();
      const double sxx = (win.array() * px.array().square()).sum() - mx * mx;
      const double syy = (win.array() * py.array().square()).sum() - my * my;
      const double sxy = (win.array() * px.array() * py.array()).sum() - mx * my;
      total += ((2 * mx * my + c1) * (2 * sxy + c2)) /
               ((mx * mx + my * my + c1) * (sxx + syy + c2));
    }
  }
  return total / static_cast<double>(nr * nc);
}

}  // namespace

double psnr(const ColorImage& x, const ColorImage& y) {
  require_same(x, y, "psnr");
  double se = 0.0;
  for (int c = 0; c < 3; ++c) se += (x.channel(c) - y.channel(c)).squaredNorm();
  const double n = 3.0 * static_cast<double>(x.height * x.width);
  if (n == 0.0) throw ParameterError("psnr: empty image");
  const double mse = se / n;
  if (mse == 0.0) return kPsnrCap;
  return std::min(kPsnrCap, 10.0 * std::log10(1.0 / mse));
}

double ssim(const ColorImage& x, const ColorImage& y) {
  require_same(x, y, "ssim");
  if (x.height == 0 || x.width == 0) throw ParameterError("ssim: empty image");
  auto size = static_cast<Eigen::Index>(std::min<std::size_t>({11, x.height, x.width}));
  if (size % 2 == 0) --size;
  const Eigen::MatrixXd win = gaussian_window(size, 1.5);
  double total = 0.0;
  for (int c = 0; c < 3; ++c) total += ssim_channel(x.channel(c), y.channel(c), win);
  return total / 3.0;
}

double relative_residual(const ColorImage& x, const ColorImage& y) {
  require_same(x, y, "relative_residual");
  double num = 0.0;
  double den = 0.0;
  for (int c = 0; c < 3; ++c) {
    num += (y.channel(c) - x.channel(c)).squaredNorm();
    den += x.channel(c).squaredNorm();
  }
  if (den == 0.0) throw ParameterError("relative_residual: reference image is zero");
  return std::sqrt(num / den);
}

Eigen::Matrix3d channel_correlation(const ColorImage& img) {
  const auto n = static_cast<Eigen::Index>(img.height * img.width);
  Eigen::MatrixXd v(n, 3);
  for (int c = 0; c < 3; ++c) {
    const RMatrix& ch = img.channel(c);
    v.col(c) = Eigen::Map<const Eigen::VectorXd>(ch.data(), n);
  }
  v.rowwise() -= v.colwise().mean();
  Eigen::Matrix3d out = Eigen::Matrix3d::Identity();
  Eigen::Vector3d sd;
  for (int c = 0; c < 3; ++c) sd(c) = v.col(c).norm();
  for (int a = 0; a < 3; ++a) {
    for (int b = a + 1; b < 3; ++b) {
      const double r = (sd(a) > 0.0 && sd(b) > 0.0) ? v.col(a).dot(v.col(b)) / (sd(a) * sd(b))
                                                    : 0.0;
      out(a, b) = r;
      out(b, a) = r;
    }
  }
  return out;
}

double correlation_deviation(const Eigen::Matrix3d& a, const Eigen::Matrix3d& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

RestorationMetrics compute_metrics(const ColorImage& x, const ColorImage& restored) {
  RestorationMetrics m;
  m.psnr = psnr(x, restored);
  m.ssim = ssim(x, restored);
  m.rr = relative_residual(x, restored);
  m.corr_orig = channel_correlation(x);
  m.corr_restored = channel_correlation(restored);
  return m;
}

}  // namespace quatinv::apps
