#include "quatinv/crep.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "quatinv/errors.hpp"

namespace quatinv {

namespace {

Eigen::Index idx(std::size_t n) { return static_cast<Eigen::Index>(n); }

void require_even(const CMatrix& c, const char* what) {
  if (c.rows() % 2 != 0 || c.cols() % 2 != 0) {
    throw DimensionError(std::string(what) + ": complex representation must have even " +
                         "dimensions, got " +
                         shape_string(static_cast<std::size_t>(c.rows()),
                                      static_cast<std::size_t>(c.cols())));
  }
}

}  // namespace

CRep to_crep(const QMatrix& a) {
  const Eigen::Index m = idx(a.rows());
  const Eigen::Index n = idx(a.cols());
  CMatrix c(2 * m, 2 * n);
  c.topLeftCorner(m, n) = a.q1();
  c.topRightCorner(m, n) = a.q2();
  c.bottomLeftCorner(m, n) = -a.q2().conjugate();
  c.bottomRightCorner(m, n) = a.q1().conjugate();
  return {std::move(c), a.rows(), a.cols()};
}

CRepRow to_crep_row(const QMatrix& a) {
  CMatrix r(a.q1().rows(), 2 * a.q1().cols());
  r << a.q1(), a.q2();
  return CRepRow(std::move(r));
}

double symplectic_defect(const CMatrix& c) {
  require_even(c, "symplectic_defect");
  const Eigen::Index m = c.rows() / 2;
  const Eigen::Index n = c.cols() / 2;
  // J C - conj(C) J = [[R + conj(Q), S - conj(P)], [conj(S) - P, -(Q + conj(R))]]
  const auto p = c.topLeftCorner(m, n);
  const auto q = c.topRightCorner(m, n);
  const auto r = c.bottomLeftCorner(m, n);
  const auto s = c.bottomRightCorner(m, n);
  const double a = (r + q.conjugate()).squaredNorm();
  const double b = (s - p.conjugate()).squaredNorm();
  return std::sqrt(2.0 * (a + b));
}

double default_crep_tolerance(const CMatrix& c) { return 1e-10 * std::max(1.0, c.norm()); }

QMatrix from_crep(const CMatrix& c, double tol) {
  require_even(c, "from_crep");
  if (tol < 0.0) tol = default_crep_tolerance(c);
  const double defect = symplectic_defect(c);
  if (!(defect <= tol)) {
    std::ostringstream msg;
    msg << "from_crep: matrix violates the symplectic constraint (defect " << defect
        << " > tolerance " << tol << ")";
    throw StructureError(msg.str());
  }
  const Eigen::Index m = c.rows() / 2;
  const Eigen::Index n = c.cols() / 2;
  CMatrix q1 = 0.5 * (c.topLeftCorner(m, n) + c.bottomRightCorner(m, n).conjugate());
  CMatrix q2 = 0.5 * (c.topRightCorner(m, n) - c.bottomLeftCorner(m, n).conjugate());
  return {std::move(q1), std::move(q2)};
}

QMatrix from_crep(const CRep& c) { return from_crep(c.data(), -1.0); }

QMatrix from_crep_row(const CMatrix& row, std::size_t n) {
  if (static_cast<std::size_t>(row.cols()) != 2 * n) {
    throw DimensionError("from_crep_row: expected " + std::to_string(2 * n) + " columns, got " +
                         std::to_string(row.cols()));
  }
  return {row.leftCols(idx(n)), row.rightCols(idx(n))};
}

CRep symmetrize_crep(const CMatrix& c0, std::size_t m, std::size_t n) {
  if (c0.rows() != idx(2 * m) || c0.cols() != idx(2 * n)) {
    throw DimensionError("symmetrize_crep: expected " + shape_string(2 * m, 2 * n) + ", got " +
                         shape_string(static_cast<std::size_t>(c0.rows()),
                                      static_cast<std::size_t>(c0.cols())));
  }
  const Eigen::Index mi = idx(m);
  const Eigen::Index ni = idx(n);
  const auto p = c0.topLeftCorner(mi, ni);
  const auto q = c0.topRightCorner(mi, ni);
  const auto r = c0.bottomLeftCorner(mi, ni);
  const auto s = c0.bottomRightCorner(mi, ni);
  // J_m^{-1} conj(C0) J_n = [[conj(S), -conj(R)], [-conj(Q), conj(P)]]
  CMatrix c(2 * mi, 2 * ni);
  c.topLeftCorner(mi, ni) = 0.5 * (p + s.conjugate());
  c.topRightCorner(mi, ni) = 0.5 * (q - r.conjugate());
  c.bottomLeftCorner(mi, ni) = 0.5 * (r - q.conjugate());
  c.bottomRightCorner(mi, ni) = 0.5 * (s + p.conjugate());
  return {std::move(c), m, n};
}

CMatrix symplectic_unit(std::size_t k) {
  const Eigen::Index ki = idx(k);
  CMatrix j = CMatrix::Zero(2 * ki, 2 * ki);
  j.topRightCorner(ki, ki).setIdentity();
  j.bottomLeftCorner(ki, ki) = -CMatrix::Identity(ki, ki);
  return j;
}

}  // namespace quatinv
