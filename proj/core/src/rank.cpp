#include "quatinv/rank.hpp"

#include <algorithm>
#include <limits>

#include "quatinv/crep.hpp"

namespace quatinv {

double rank_threshold(double sigma_max, std::size_t m, std::size_t n, double rtol) {
  if (rtol <= 0.0) {
    rtol = static_cast<double>(std::max(m, n)) * std::numeric_limits<double>::epsilon();
  }
  return rtol * sigma_max;
}

RVector singular_values(const QMatrix& a) {
  const std::size_t k = std::min(a.rows(), a.cols());
  RVector out = RVector::Zero(static_cast<Eigen::Index>(k));
  if (k == 0) return out;
  const Eigen::MatrixXcd c = to_crep(a).data();
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(c);
  const auto& s = svd.singularValues();
  // Pairs (s_{2i}, s_{2i+1}) are equal in exact arithmetic.
  for (std::size_t i = 0; i < k; ++i) {
    const auto e = static_cast<Eigen::Index>(2 * i);
    out(static_cast<Eigen::Index>(i)) = 0.5 * (s(e) + s(e + 1));
  }
  return out;
}

std::size_t rank(const QMatrix& a, double rtol) {
  const RVector s = singular_values(a);
  if (s.size() == 0 || s(0) == 0.0) return 0;
  const double thr = rank_threshold(s(0), a.rows(), a.cols(), rtol);
  std::size_t r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > thr) ++r;
  return r;
}

}  // namespace quatinv
