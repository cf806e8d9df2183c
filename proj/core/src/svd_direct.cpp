#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "quatinv/errors.hpp"
#include "quatinv/svd.hpp"

namespace quatinv::direct {

namespace {

// Columns a, b of m <- (c m_a + s m_b, -s m_a + c m_b).
void rotate_cols(RMatrix& m, Eigen::Index a, Eigen::Index b, double c, double s) {
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    const double x = m(r, a);
    const double y = m(r, b);
    m(r, a) = c * x + s * y;
    m(r, b) = -s * x + c * y;
  }
}

void givens(double y, double z, double& c, double& s, double& r) {
  if (z == 0.0) {
    c = 1.0;
    s = 0.0;
    r = y;
    return;
  }
  r = std::hypot(y, z);
  c = y / r;
  s = z / r;
}

// Quaternion column c of u is multiplied on the right by the real matrix rb.
void apply_real_right(QArray& u, const RMatrix& rb, std::size_t ncols) {
  std::vector<Quaternion> row(ncols);
  for (std::size_t r = 0; r < u.rows(); ++r) {
    for (std::size_t j = 0; j < ncols; ++j) {
      Quaternion acc;
      for (std::size_t k = 0; k < ncols; ++k) {
        const double w = rb(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j));
        if (w != 0.0) acc += u(r, k) * w;
      }
      row[j] = acc;
    }
    for (std::size_t j = 0; j < ncols; ++j) u(r, j) = row[j];
  }
}

Svd svd_tall(const QArray& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  QArray b = a;
  QArray u = QArray::identity(m);
  QArray v = QArray::identity(n);

  std::vector<Quaternion> x;
  for (std::size_t k = 0; k < n; ++k) {
    x.assign(m - k, Quaternion{});
    for (std::size_t i = k; i < m; ++i) x[i - k] = b(i, k);
    const Reflector hl = make_reflector(x);
    apply_left(b, hl, k, k);
    apply_right(u, hl, 0, k);
    if (hl.tau != 0.0) {
      b(k, k) = hl.alpha;
      for (std::size_t i = k + 1; i < m; ++i) b(i, k) = Quaternion{};
    }

    if (k + 2 < n) {
      x.assign(n - k - 1, Quaternion{});
      for (std::size_t j = k + 1; j < n; ++j) x[j - k - 1] = b(k, j).conj();
      const Reflector hr = make_reflector(x);
      apply_right(b, hr, k, k + 1);
      apply_right(v, hr, 0, k + 1);
      if (hr.tau != 0.0) {
        b(k, k + 1) = hr.alpha.conj();
        for (std::size_t j = k + 2; j < n; ++j) b(k, j) = Quaternion{};
      }
    }
  }

  // Unit diagonal scalings P, Q with P^* B Q real:
  //   p_i = d_i q_i / |d_i q_i|,  q_{i+1} = conj(e_i) p_i / |e_i|.
  std::vector<double> d(n);
  std::vector<double> e(n > 0 ? n - 1 : 0);
  std::vector<Quaternion> p(n, units::one);
  std::vector<Quaternion> q(n, units::one);
  for (std::size_t i = 0; i < n; ++i) {
    const Quaternion di = b(i, i) * q[i];
    p[i] = unit_or_one(di);
    d[i] = di.abs();
    if (i + 1 < n) {
      const Quaternion ei = b(i, i + 1);
      q[i + 1] = unit_or_one(ei.conj() * p[i]);
      e[i] = ei.abs();
    }
  }
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t i = 0; i < n; ++i) u(r, i) = u(r, i) * p[i];
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t i = 0; i < n; ++i) v(r, i) = v(r, i) * q[i];

  RMatrix ub = RMatrix::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  RMatrix vb = ub;
  bidiagonal_svd(d, e, ub, vb);
  apply_real_right(u, ub, n);
  apply_real_right(v, vb, n);
  return {std::move(u), std::move(d), std::move(v)};
}

}  // namespace

void bidiagonal_svd(std::vector<double>& d, std::vector<double>& e, RMatrix& ub, RMatrix& vb) {
  const std::size_t n = d.size();
  if (n == 0) return;
  if (e.size() + 1 != n) throw DimensionError("bidiagonal_svd: superdiagonal length mismatch");
  const double eps = std::numeric_limits<double>::epsilon();
  double anorm = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    anorm = std::max(anorm, std::abs(d[i]) + (i + 1 < n ? std::abs(e[i]) : 0.0));
  const std::size_t max_sweeps = 75 * n * n + 100;

  for (std::size_t sweep = 0; sweep < max_sweeps; ++sweep) {
    for (std::size_t i = 0; i + 1 < n; ++i)
      if (std::abs(e[i]) <= eps * (std::abs(d[i]) + std::abs(d[i + 1]))) e[i] = 0.0;

    std::size_t hi = n - 1;
    while (hi > 0 && e[hi - 1] == 0.0) --hi;
    if (hi == 0) break;
    std::size_t lo = hi - 1;
    while (lo > 0 && e[lo - 1] != 0.0) --lo;

    // Zero diagonal inside the block: rotate the offending row's coupling away.
    bool split = false;
    for (std::size_t i = lo; i < hi; ++i) {
      if (std::abs(d[i]) > eps * anorm) continue;
      d[i] = 0.0;
      double f = e[i];
      e[i] = 0.0;
      for (std::size_t j = i + 1; j <= hi && f != 0.0; ++j) {
        double c, s, r;
        givens(d[j], f, c, s, r);
        d[j] = r;
        rotate_cols(ub, static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i), c, s);
        if (j < hi) {
          f = -s * e[j];
          e[j] = c * e[j];
        }
      }
      split = true;
      break;
    }
    if (split) continue;
    if (std::abs(d[hi]) <= eps * anorm) {
      d[hi] = 0.0;
      double f = e[hi - 1];
      e[hi - 1] = 0.0;
      for (std::size_t jj = hi; jj-- > lo && f != 0.0;) {
        double c, s, r;
        givens(d[jj], f, c, s, r);
        d[jj] = r;
        rotate_cols(vb, static_cast<Eigen::Index>(jj), static_cast<Eigen::Index>(hi), c, s);
        if (jj > lo) {
          f = -s * e[jj - 1];
          e[jj - 1] = c * e[jj - 1];
        }
      }
      continue;
    }

    // Wilkinson shift from the trailing 2x2 of B^T B.
    const double dm = d[hi - 1];
    const double em = hi - 1 > lo ? e[hi - 2] : 0.0;
    const double a11 = dm * dm + em * em;
    const double a12 = dm * e[hi - 1];
    const double a22 = d[hi] * d[hi] + e[hi - 1] * e[hi - 1];
    const double delta = 0.5 * (a11 - a22);
    double mu;
    if (a12 == 0.0) {
      mu = a22;
    } else {
      const double denom = delta + std::copysign(std::hypot(delta, a12), delta == 0.0 ? 1.0 : delta);
      mu = a22 - a12 * a12 / denom;
    }

    double y = d[lo] * d[lo] - mu;
    double z = d[lo] * e[lo];
    for (std::size_t k = lo; k < hi; ++k) {
      double c, s, r;
      givens(y, z, c, s, r);
      if (k > lo) e[k - 1] = r;
      const double dk = d[k];
      const double ek = e[k];
      d[k] = c * dk + s * ek;
      e[k] = -s * dk + c * ek;
      const double bulge = s * d[k + 1];
      d[k + 1] = c * d[k + 1];
      rotate_cols(vb, static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k + 1), c, s);

      givens(d[k], bulge, c, s, r);
      d[k] = r;
      const double ek2 = e[k];
      const double dk1 = d[k + 1];
      e[k] = c * ek2 + s * dk1;
      d[k + 1] = -s * ek2 + c * dk1;
      rotate_cols(ub, static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k + 1), c, s);
      if (k + 1 < hi) {
        y = e[k];
        z = s * e[k + 1];
        e[k + 1] = c * e[k + 1];
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (d[i] < 0.0) {
      d[i] = -d[i];
      vb.col(static_cast<Eigen::Index>(i)) *= -1.0;
    }
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return d[a] > d[b]; });
  std::vector<double> ds(n);
  RMatrix us(ub.rows(), ub.cols());
  RMatrix vs(vb.rows(), vb.cols());
  for (std::size_t i = 0; i < n; ++i) {
    ds[i] = d[order[i]];
    us.col(static_cast<Eigen::Index>(i)) = ub.col(static_cast<Eigen::Index>(order[i]));
    vs.col(static_cast<Eigen::Index>(i)) = vb.col(static_cast<Eigen::Index>(order[i]));
  }
  d = std::move(ds);
  ub = std::move(us);
  vb = std::move(vs);
}

Svd svd(const QArray& a) {
  if (a.rows() >= a.cols()) return svd_tall(a);
  // A^* = U' S V'^*  =>  A = V' S U'^*
  Svd t = svd_tall(conj_transpose(a));
  return {std::move(t.v), std::move(t.sigma), std::move(t.u)};
}

}  // namespace quatinv::direct
