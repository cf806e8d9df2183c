#include "quatinv/apps/blur.hpp"

#include <cmath>
#include <numbers>

#include "quatinv/errors.hpp"

namespace quatinv::apps {

namespace {

Eigen::Index idx(std::size_t n) { return static_cast<Eigen::Index>(n); }

RMatrix kron(const RMatrix& a, const RMatrix& b) {
  RMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace

BlurOperator build_blur(const BlurParams& params) {
  if (params.p == 0 || params.q == 0) throw ParameterError("blur: p and q must be >= 1");
  if (!(params.sigma > 0.0)) throw ParameterError("blur: sigma must be > 0");
  if (params.s == 0) throw ParameterError("blur: s must be >= 1 (box height 1/(2s-1))");

  BlurOperator op;
  op.params = params;
  const auto p = idx(params.p);
  const auto q = idx(params.q);
  const auto r = idx(params.r);
  const auto s = idx(params.s);
  const double sig = params.sigma;
  const double norm = 1.0 / (sig * std::sqrt(2.0 * std::numbers::pi));
  op.t0_blur = RMatrix::Zero(p, p);
  for (Eigen::Index i = 0; i < p; ++i) {
    for (Eigen::Index j = 0; j < p; ++j) {
      const Eigen::Index d = std::abs(i - j);
      if (d <= r) op.t0_blur(i, j) = norm * std::exp(-static_cast<double>(d * d) / (2.0 * sig * sig));
    }
  }
  op.t1_blur = RMatrix::Zero(q, q);
  const double box = 1.0 / static_cast<double>(2 * s - 1);
  for (Eigen::Index i = 0; i < q; ++i)
    for (Eigen::Index j = 0; j < q; ++j)
      if (std::abs(i - j) <= s) op.t1_blur(i, j) = box;

  op.a1 = kron(op.t0_blur, op.t1_blur);
  op.a2 = -0.5 * op.a1;
  op.a3 = -0.5 * op.a1;
  op.a = QMatrix::from_imaginary(op.a1, op.a2, op.a3);
  return op;
}

QMatrix blur(const BlurOperator& op, const ColorImage& x) {
  if (x.height != op.size()) {
    throw DimensionError("blur: image height " + std::to_string(x.height) + " must equal p*q = " +
                         std::to_string(op.size()));
  }
  return op.a * to_quaternion(x);
}

RMatrix real_block_operator(const BlurOperator& op) {
  const Eigen::Index h = op.a1.rows();
  RMatrix ar = RMatrix::Zero(3 * h, 3 * h);
  ar.block(0, h, h, h) = -op.a3;
  ar.block(0, 2 * h, h, h) = op.a2;
  ar.block(h, 0, h, h) = op.a3;
  ar.block(h, 2 * h, h, h) = -op.a1;
  ar.block(2 * h, 0, h, h) = -op.a2;
  ar.block(2 * h, h, h, h) = op.a1;
  return ar;
}

}  // namespace quatinv::apps
