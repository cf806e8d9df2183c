#include "quatinv/one_inverse.hpp"

#include <algorithm>

#include "quatinv/crep.hpp"
#include "quatinv/errors.hpp"
#include "quatinv/random.hpp"

namespace quatinv {

namespace {

Eigen::Index idx(std::size_t n) { return static_cast<Eigen::Index>(n); }

void check_block(const QMatrix& b, std::size_t rows, std::size_t cols, const char* name) {
  if (b.rows() != rows || b.cols() != cols) {
    throw DimensionError(std::string("one_inverse: free block ") + name + " is " +
                         shape_string(b.rows(), b.cols()) + ", expected " +
                         shape_string(rows, cols));
  }
}

// Y = [[Sigma_s^{-1}, K], [L, M]] (p x q).
QMatrix middle_block(const RVector& sigma, std::size_t s, std::size_t p, std::size_t q,
                     const detail::FreeBlockSet& fb) {
  QMatrix y(p, q);
  CMatrix y1 = CMatrix::Zero(idx(p), idx(q));
  CMatrix y2 = CMatrix::Zero(idx(p), idx(q));
  for (std::size_t i = 0; i < s; ++i) y1(idx(i), idx(i)) = 1.0 / sigma(idx(i));
  y1.topRightCorner(idx(s), idx(q - s)) = fb.k.q1();
  y2.topRightCorner(idx(s), idx(q - s)) = fb.k.q2();
  y1.bottomLeftCorner(idx(p - s), idx(s)) = fb.l.q1();
  y2.bottomLeftCorner(idx(p - s), idx(s)) = fb.l.q2();
  y1.bottomRightCorner(idx(p - s), idx(q - s)) = fb.m.q1();
  y2.bottomRightCorner(idx(p - s), idx(q - s)) = fb.m.q2();
  return {std::move(y1), std::move(y2)};
}

QMatrix assemble(const QSvdResult& svd, std::size_t s, const detail::FreeBlockSet& fb,
                 Route route) {
  if (route == Route::crep) {
    const CMatrix c = detail::one_inverse_crep_full(svd, s, fb);
    return from_crep(symmetrize_crep(c, svd.v.rows(), svd.u.rows()));
  }
  direct::Svd d;
  d.u = direct::from_qmatrix(svd.u);
  d.v = direct::from_qmatrix(svd.v);
  d.sigma.assign(svd.sigma.data(), svd.sigma.data() + svd.sigma.size());
  return direct::to_qmatrix(detail::one_inverse_direct(d, s, fb));
}

}  // namespace

namespace detail {

FreeBlockSet make_free_blocks(std::size_t s, std::size_t q, std::size_t p,
                              const FreeBlocks& blocks) {
  FreeBlockSet fb{QMatrix(s, q - s), QMatrix(p - s, s), QMatrix(p - s, q - s)};
  if (blocks.random) {
    Rng rng(blocks.seed);
    fb.k = random_uniform(s, q - s, rng);
    fb.l = random_uniform(p - s, s, rng);
    fb.m = random_uniform(p - s, q - s, rng);
  }
  return fb;
}

CMatrix one_inverse_crep_full(const QSvdResult& svd, std::size_t s, const FreeBlockSet& fb) {
  const std::size_t q = svd.u.rows();
  const std::size_t p = svd.v.rows();
  const QMatrix y = middle_block(svd.sigma, s, p, q, fb);
  const CMatrix vc = to_crep(svd.v).data();
  const CMatrix yc = to_crep(y).data();
  const CMatrix uhc = to_crep(svd.u).data().adjoint();
  return vc * yc * uhc;
}

direct::QArray one_inverse_direct(const direct::Svd& svd, std::size_t s, const FreeBlockSet& fb) {
  const std::size_t q = svd.u.rows();
  const std::size_t p = svd.v.rows();
  RVector sigma(idx(svd.sigma.size()));
  for (std::size_t i = 0; i < svd.sigma.size(); ++i) sigma(idx(i)) = svd.sigma[i];
  const direct::QArray y = direct::from_qmatrix(middle_block(sigma, s, p, q, fb));
  return direct::matmul(direct::matmul(svd.v, y), direct::conj_transpose(svd.u));
}

}  // namespace detail

QMatrix one_inverse(const QMatrix& w, const QMatrix& k, const QMatrix& l, const QMatrix& m,
                    Route route, double rtol) {
  const QSvdResult svd = qsvd(w, route, rtol);
  const std::size_t q = w.rows();
  const std::size_t p = w.cols();
  const std::size_t s = svd.rank;
  check_block(k, s, q - s, "K");
  check_block(l, p - s, s, "L");
  check_block(m, p - s, q - s, "M");
  return assemble(svd, s, {k, l, m}, route);
}

QMatrix one_inverse(const QMatrix& w, const FreeBlocks& blocks, Route route, double rtol) {
  const QSvdResult svd = qsvd(w, route, rtol);
  const std::size_t s = svd.rank;
  return assemble(svd, s, detail::make_free_blocks(s, w.rows(), w.cols(), blocks), route);
}

}  // namespace quatinv
