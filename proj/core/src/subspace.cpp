#include "quatinv/subspace.hpp"

#include "quatinv/errors.hpp"
#include "quatinv/rank.hpp"

namespace quatinv {

namespace {

QMatrix normalized(const QMatrix& a) {
  const double n = a.fro_norm();
  return n > 0.0 ? a * (1.0 / n) : a;
}

bool same_span(const QMatrix& x, const QMatrix& g, bool stack_rows, double rtol) {
  const QMatrix xn = normalized(x);
  const QMatrix gn = normalized(g);
  const std::size_t rg = rank(gn, rtol);
  const std::size_t rx = rank(xn, rtol);
  if (rg != rx) return false;
  const QMatrix both = stack_rows ? vstack(gn, xn) : hstack(gn, xn);
  return rank(both, rtol) == rg;
}

void require(bool ok, const char* what, const QMatrix& x, const QMatrix& g) {
  if (!ok) {
    throw DimensionError(std::string(what) + ": operands " + shape_string(x.rows(), x.cols()) +
                         " and " + shape_string(g.rows(), g.cols()) + " do not conform");
  }
}

}  // namespace

bool right_range_equal(const QMatrix& x, const QMatrix& s, double rtol) {
  require(x.rows() == s.rows(), "right_range_equal", x, s);
  return same_span(x, s, false, rtol);
}

bool right_null_equal(const QMatrix& x, const QMatrix& t, double rtol) {
  require(x.cols() == t.cols(), "right_null_equal", x, t);
  return same_span(x, t, true, rtol);
}

bool left_range_equal(const QMatrix& x, const QMatrix& s, double rtol) {
  require(x.cols() == s.cols(), "left_range_equal", x, s);
  return same_span(x, s, true, rtol);
}

bool left_null_equal(const QMatrix& x, const QMatrix& t, double rtol) {
  require(x.rows() == t.rows(), "left_null_equal", x, t);
  return same_span(x, t, false, rtol);
}

}  // namespace quatinv
