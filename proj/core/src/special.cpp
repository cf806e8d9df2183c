#include "quatinv/special.hpp"

#include "quatinv/errors.hpp"
#include "quatinv/geninv.hpp"
#include "quatinv/rank.hpp"

namespace quatinv {

namespace {

void require_square(const QMatrix& a, const char* what) {
  if (a.rows() != a.cols()) {
    throw DimensionError(std::string(what) + ": matrix must be square, got " +
                         shape_string(a.rows(), a.cols()));
  }
}

QMatrix normalized(const QMatrix& a) {
  const double n = a.fro_norm();
  return n > 0.0 ? a * (1.0 / n) : a;
}

// Normalized power A^k / ||A^k||_F (identity for k = 0).
QMatrix unit_power(const QMatrix& a, std::size_t k) {
  QMatrix p = QMatrix::identity(a.rows());
  for (std::size_t i = 0; i < k; ++i) p = normalized(p * a);
  return p;
}

std::map<std::string, double> drazin_residuals(const QMatrix& a, const QMatrix& x,
                                               std::size_t k) {
  QMatrix ak = QMatrix::identity(a.rows());
  for (std::size_t i = 0; i < k; ++i) ak = ak * a;
  const QMatrix ax = a * x;
  const QMatrix xa = x * a;
  return {
      {"drazin", (ak * ax - ak).fro_norm()},
      {"outer", (xa * x - x).fro_norm()},
      {"commute", (ax - xa).fro_norm()},
  };
}

// X = A_hat^(2)_{r,(W,W)} with W a normalized power of A_hat = A / ||A||_F;
// real positive scaling commutes with everything, so X / ||A||_F is the
// inverse for A.
QMatrix w_power_inverse(const QMatrix& a, std::size_t k, Route route, double rtol, bool& ok) {
  const double scale = a.fro_norm();
  const QMatrix ah = a * (1.0 / scale);
  GenInvOptions opt;
  opt.route = route;
  opt.rank_rtol = rtol;
  const InverseReport rep = outer_w_right(ah, unit_power(ah, k), opt);
  ok = rep.exists;
  return rep.x * (1.0 / scale);
}

}  // namespace

std::size_t mat_index(const QMatrix& a, double rtol) {
  require_square(a, "mat_index");
  const std::size_t n = a.rows();
  const QMatrix ah = normalized(a);
  QMatrix p = QMatrix::identity(n);
  std::size_t prev = n;
  for (std::size_t k = 0; k < n; ++k) {
    p = normalized(p * ah);
    const std::size_t r = rank(p, rtol);
    if (r == prev) return k;
    prev = r;
  }
  return n;
}

DrazinResult drazin(const QMatrix& a, Route route, double rtol) {
  require_square(a, "drazin");
  DrazinResult out;
  const std::size_t n = a.rows();
  if (n == 0 || a.fro_norm() == 0.0) {
    out.x = QMatrix(n, n);
    out.index = n == 0 ? 0 : 1;
    out.residuals = drazin_residuals(a, out.x, out.index);
    return out;
  }
  out.index = mat_index(a, rtol);
  bool ok = false;
  out.x = w_power_inverse(a, out.index, route, rtol, ok);
  out.exists = ok;
  if (!ok) out.message = "core product of the A^k factors is numerically singular";
  out.residuals = drazin_residuals(a, out.x, out.index);
  return out;
}

DrazinResult group_inverse(const QMatrix& a, Route route, double rtol) {
  require_square(a, "group_inverse");
  DrazinResult out;
  const std::size_t n = a.rows();
  out.x = QMatrix(n, n);
  if (n == 0 || a.fro_norm() == 0.0) {
    out.index = n == 0 ? 0 : 1;
  } else {
    out.index = mat_index(a, rtol);
    if (out.index > 1) {
      out.exists = false;
      out.message = "group inverse requires Ind(A) <= 1, found Ind(A) = " +
                    std::to_string(out.index);
    } else {
      bool ok = false;
      out.x = w_power_inverse(a, 1, route, rtol, ok);
      out.exists = ok;
      if (!ok) out.message = "core product of the factors of A is numerically singular";
    }
  }
  const QMatrix ax = a * out.x;
  const QMatrix xa = out.x * a;
  out.residuals = {
      {"one", (ax * a - a).fro_norm()},
      {"outer", (xa * out.x - out.x).fro_norm()},
      {"commute", (ax - xa).fro_norm()},
  };
  return out;
}

}  // namespace quatinv
