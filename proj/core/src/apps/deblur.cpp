#include "quatinv/apps/deblur.hpp"

#include "quatinv/errors.hpp"
#include "quatinv/rank.hpp"

namespace quatinv::apps {

QuaternionRestoration deblur_quaternion(const QMatrix& a, const QMatrix& b,
                                        const DeblurOptions& opt) {
  if (a.rows() != b.rows()) {
    throw DimensionError("deblur: A is " + shape_string(a.rows(), a.cols()) + ", B is " +
                         shape_string(b.rows(), b.cols()));
  }
  QuaternionRestoration out;
  out.xhat = pinv(a, opt.algorithm, opt.rank_rtol) * b;
  out.restored = from_quaternion(out.xhat);
  return out;
}

ColorImage real_block_restore(const BlurOperator& op, const QMatrix& b, double rank_rtol) {
  const std::size_t h = op.size();
  if (b.rows() != h) {
    throw DimensionError("real_block_restore: B is " + shape_string(b.rows(), b.cols()) +
                         ", operator height is " + std::to_string(h));
  }
  const auto hi = static_cast<Eigen::Index>(h);
  const Eigen::Index w = static_cast<Eigen::Index>(b.cols());
  const RMatrix ar = real_block_operator(op);
  RMatrix br(3 * hi, w);
  br << b.i_part(), b.j_part(), b.k_part();

  const Eigen::MatrixXd ad = ar;
  Eigen::BDCSVD<Eigen::MatrixXd> svd(ad, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& s = svd.singularValues();
  Eigen::VectorXd sinv = Eigen::VectorXd::Zero(s.size());
  if (s.size() > 0 && s(0) > 0.0) {
    const double thr = rank_threshold(s(0), ar.rows(), ar.cols(), rank_rtol);
    for (Eigen::Index i = 0; i < s.size(); ++i)
      if (s(i) > thr) sinv(i) = 1.0 / s(i);
  }
  const Eigen::MatrixXd x =
      svd.matrixV() * sinv.asDiagonal() * (svd.matrixU().transpose() * br);

  ColorImage img(h, b.cols());
  img.r = x.topRows(hi);
  img.g = x.middleRows(hi, hi);
  img.b = x.bottomRows(hi);
  return img.clamped();
}

}  // namespace quatinv::apps
