#include <algorithm>
#include <numeric>
#include <vector>

#include "quatinv/crep.hpp"
#include "quatinv/rank.hpp"
#include "quatinv/svd.hpp"

namespace quatinv {

namespace {

using CVector = Eigen::VectorXcd;

Eigen::Index idx(std::size_t n) { return static_cast<Eigen::Index>(n); }

// J^{-1} conj(c): the second column of the representation whose first column is c.
CVector partner(const CVector& c) {
  const Eigen::Index h = c.size() / 2;
  CVector out(c.size());
  out.head(h) = -c.tail(h).conjugate();
  out.tail(h) = c.head(h).conjugate();
  return out;
}

// Accepted first columns plus their partners, kept as an orthonormal list.
struct SymplecticBasis {
  std::vector<CVector> cols;

  // Project x against every stored vector twice; returns the coefficients
  // summed over both passes so callers can mirror them on another vector.
  std::vector<Complex> project(CVector& x) const {
    std::vector<Complex> coef(cols.size(), Complex{});
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t k = 0; k < cols.size(); ++k) {
        const Complex c = cols[k].dot(x);
        x -= c * cols[k];
        coef[k] += c;
      }
    }
    return coef;
  }

  void add(const CVector& c) {
    cols.push_back(c);
    cols.push_back(partner(c));
  }
};

QMatrix columns_to_qmatrix(const std::vector<CVector>& cols, std::size_t m) {
  CMatrix q1(idx(m), idx(cols.size()));
  CMatrix q2(idx(m), idx(cols.size()));
  for (std::size_t k = 0; k < cols.size(); ++k) {
    q1.col(idx(k)) = cols[k].head(idx(m));
    q2.col(idx(k)) = -cols[k].tail(idx(m)).conjugate();
  }
  return {std::move(q1), std::move(q2)};
}

// Extend an orthonormal symplectic family to a full basis of C^{2d}, first
// from the candidate columns, then from the standard basis vector with the
// largest component outside the current span.
void complete(SymplecticBasis& basis, std::vector<CVector>& firsts, std::size_t d,
              const Eigen::MatrixXcd& candidates, Eigen::Index start) {
  auto accept = [&](CVector x) {
    x.normalize();
    basis.add(x);
    firsts.push_back(x);
  };
  for (Eigen::Index l = start; l < candidates.cols() && firsts.size() < d; ++l) {
    CVector x = candidates.col(l);
    basis.project(x);
    if (x.squaredNorm() > 0.5) accept(x);
  }
  while (firsts.size() < d) {
    CVector best;
    double best_norm = -1.0;
    for (std::size_t e = 0; e < 2 * d; ++e) {
      CVector x = CVector::Zero(idx(2 * d));
      x(idx(e)) = 1.0;
      basis.project(x);
      const double nrm = x.squaredNorm();
      if (nrm > best_norm) {
        best_norm = nrm;
        best = std::move(x);
      }
    }
    accept(best);
  }
}

}  // namespace

QMatrix QSvdResult::reconstruct() const {
  const Eigen::Index k = sigma.size();
  const auto d = sigma.cast<Complex>().asDiagonal();
  const QMatrix us(u.q1().leftCols(k) * d, u.q2().leftCols(k) * d);
  return us * v.block(0, 0, v.rows(), static_cast<std::size_t>(k)).conj_transpose();
}

namespace crep {

QSvdResult svd(const QMatrix& a, double rtol) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  const std::size_t kmin = std::min(m, n);
  QSvdResult out;
  out.sigma = RVector::Zero(idx(kmin));
  if (m == 0 || n == 0) {
    out.u = QMatrix::identity(m);
    out.v = QMatrix::identity(n);
    return out;
  }

  const Eigen::MatrixXcd c = to_crep(a).data();
  Eigen::BDCSVD<Eigen::MatrixXcd> csvd(c, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::VectorXd& s = csvd.singularValues();
  const Eigen::MatrixXcd& cu = csvd.matrixU();
  const Eigen::MatrixXcd& cv = csvd.matrixV();

  for (std::size_t i = 0; i < kmin; ++i)
    out.sigma(idx(i)) = 0.5 * (s(idx(2 * i)) + s(idx(2 * i + 1)));
  std::size_t r = 0;
  if (out.sigma(0) > 0.0) {
    const double thr = rank_threshold(out.sigma(0), m, n, rtol);
    for (std::size_t i = 0; i < kmin; ++i)
      if (out.sigma(idx(i)) > thr) ++r;
  }
  out.rank = r;

  // Rank part: the u and v columns of a singular triplet are reduced with the
  // same coefficients so that A^C v = sigma u survives inside clusters.
  SymplecticBasis bu;
  SymplecticBasis bv;
  std::vector<CVector> ufirst;
  std::vector<CVector> vfirst;
  std::vector<double> sig;
  std::vector<bool> used(2 * r, false);
  auto reduce = [&](std::size_t l, CVector& x, CVector& y) {
    x = cu.col(idx(l));
    y = cv.col(idx(l));
    const auto coef = bu.project(x);
    for (std::size_t k = 0; k < coef.size(); ++k) y -= coef[k] * bv.cols[k];
    bv.project(y);
  };
  auto accept = [&](std::size_t l, CVector& x, CVector& y) {
    x.normalize();
    y.normalize();
    bu.add(x);
    bv.add(y);
    ufirst.push_back(x);
    vfirst.push_back(y);
    sig.push_back(s(idx(l)));
    used[l] = true;
  };
  for (std::size_t l = 0; l < 2 * r && ufirst.size() < r; ++l) {
    CVector x, y;
    reduce(l, x, y);
    if (x.squaredNorm() > 0.5 && y.squaredNorm() > 0.5) accept(l, x, y);
  }
  // Inside a large cluster every remaining candidate can fall below the
  // threshold; take the one with the largest joint residual instead.
  while (ufirst.size() < r) {
    std::size_t best = 2 * r;
    double best_norm = -1.0;
    CVector bx, by;
    for (std::size_t l = 0; l < 2 * r; ++l) {
      if (used[l]) continue;
      CVector x, y;
      reduce(l, x, y);
      const double nrm = std::min(x.squaredNorm(), y.squaredNorm());
      if (nrm > best_norm) {
        best_norm = nrm;
        best = l;
        bx = std::move(x);
        by = std::move(y);
      }
    }
    accept(best, bx, by);
  }
  std::vector<std::size_t> order(sig.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return sig[a] > sig[b]; });
  {
    std::vector<CVector> us, vs;
    for (std::size_t i : order) {
      us.push_back(ufirst[i]);
      vs.push_back(vfirst[i]);
      out.sigma(idx(us.size() - 1)) = sig[i];
    }
    ufirst = std::move(us);
    vfirst = std::move(vs);
  }

  complete(bu, ufirst, m, cu, idx(2 * ufirst.size()));
  complete(bv, vfirst, n, cv, idx(2 * vfirst.size()));
  out.u = columns_to_qmatrix(ufirst, m);
  out.v = columns_to_qmatrix(vfirst, n);
  return out;
}

}  // namespace crep

QSvdResult qsvd(const QMatrix& a, Route route, double rtol) {
  if (route == Route::crep) return crep::svd(a, rtol);
  const direct::Svd d = direct::svd(direct::from_qmatrix(a));
  QSvdResult out;
  out.u = direct::to_qmatrix(d.u);
  out.v = direct::to_qmatrix(d.v);
  out.sigma = RVector::Zero(idx(d.sigma.size()));
  for (std::size_t i = 0; i < d.sigma.size(); ++i) out.sigma(idx(i)) = d.sigma[i];
  if (!d.sigma.empty() && d.sigma[0] > 0.0) {
    const double thr = rank_threshold(d.sigma[0], a.rows(), a.cols(), rtol);
    for (double v : d.sigma)
      if (v > thr) ++out.rank;
  }
  return out;
}

}  // namespace quatinv
