#include "quatinv/qmatrix.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "quatinv/errors.hpp"

namespace quatinv {

namespace {

Eigen::Index idx(std::size_t n) { return static_cast<Eigen::Index>(n); }

void require_same_shape(const QMatrix& a, const QMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError(std::string(what) + ": shapes " + shape_string(a.rows(), a.cols()) +
                         " and " + shape_string(b.rows(), b.cols()) + " differ");
  }
}

}  // namespace

QMatrix::QMatrix(std::size_t rows, std::size_t cols)
    : q1_(CMatrix::Zero(idx(rows), idx(cols))), q2_(CMatrix::Zero(idx(rows), idx(cols))) {}

QMatrix::QMatrix(CMatrix q1, CMatrix q2) : q1_(std::move(q1)), q2_(std::move(q2)) {
  if (q1_.rows() != q2_.rows() || q1_.cols() != q2_.cols()) {
    throw DimensionError("QMatrix: component shapes differ");
  }
}

QMatrix QMatrix::identity(std::size_t n) {
  return {CMatrix::Identity(idx(n), idx(n)), CMatrix::Zero(idx(n), idx(n))};
}

QMatrix QMatrix::from_quaternions(std::size_t rows, std::size_t cols,
                                  std::span<const Quaternion> values) {
  if (values.size() != rows * cols) {
    throw DimensionError("from_quaternions: expected " + std::to_string(rows * cols) +
                         " values, got " + std::to_string(values.size()));
  }
  QMatrix out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) out.set(r, c, values[r * cols + c]);
  return out;
}

QMatrix QMatrix::from_quaternions(std::size_t rows, std::size_t cols,
                                  std::initializer_list<Quaternion> values) {
  return from_quaternions(rows, cols, std::span<const Quaternion>(values.begin(), values.size()));
}

QMatrix QMatrix::from_real(const RMatrix& re) {
  return {re.cast<Complex>(), CMatrix::Zero(re.rows(), re.cols())};
}

QMatrix QMatrix::from_imaginary(const RMatrix& x, const RMatrix& y, const RMatrix& z) {
  if (x.rows() != y.rows() || x.rows() != z.rows() || x.cols() != y.cols() ||
      x.cols() != z.cols()) {
    throw DimensionError("from_imaginary: plane shapes differ");
  }
  CMatrix q1(x.rows(), x.cols());
  CMatrix q2(x.rows(), x.cols());
  q1.real().setZero();
  q1.imag() = x;
  q2.real() = y;
  q2.imag() = z;
  return {std::move(q1), std::move(q2)};
}

QMatrix QMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows() || c0 + nc > cols()) {
    throw DimensionError("block: " + shape_string(nr, nc) + " at (" + std::to_string(r0) + "," +
                         std::to_string(c0) + ") exceeds " + shape_string(rows(), cols()));
  }
  return {q1_.block(idx(r0), idx(c0), idx(nr), idx(nc)),
          q2_.block(idx(r0), idx(c0), idx(nr), idx(nc))};
}

// (Q1 + Q2 j)^* = Q1^H - Q2^T j
QMatrix QMatrix::conj_transpose() const { return {q1_.adjoint(), -q2_.transpose()}; }

double QMatrix::fro_norm2() const { return q1_.squaredNorm() + q2_.squaredNorm(); }

double QMatrix::fro_norm() const { return std::sqrt(fro_norm2()); }

QMatrix& QMatrix::operator+=(const QMatrix& o) {
  require_same_shape(*this, o, "operator+");
  q1_ += o.q1_;
  q2_ += o.q2_;
  return *this;
}

QMatrix& QMatrix::operator-=(const QMatrix& o) {
  require_same_shape(*this, o, "operator-");
  q1_ -= o.q1_;
  q2_ -= o.q2_;
  return *this;
}

QMatrix& QMatrix::operator*=(double s) {
  q1_ *= s;
  q2_ *= s;
  return *this;
}

bool QMatrix::operator==(const QMatrix& o) const {
  return rows() == o.rows() && cols() == o.cols() && q1_ == o.q1_ && q2_ == o.q2_;
}

QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
QMatrix operator-(QMatrix a, const QMatrix& b) { return a -= b; }
QMatrix operator-(const QMatrix& a) { return a * -1.0; }
QMatrix operator*(QMatrix a, double s) { return a *= s; }
QMatrix operator*(double s, QMatrix a) { return a *= s; }

QMatrix mat_mul(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("mat_mul: inner dimensions differ, " + shape_string(a.rows(), a.cols()) +
                         " * " + shape_string(b.rows(), b.cols()));
  }
  CMatrix p1 = a.q1() * b.q1();
  p1.noalias() -= a.q2() * b.q2().conjugate();
  CMatrix p2 = a.q1() * b.q2();
  p2.noalias() += a.q2() * b.q1().conjugate();
  return {std::move(p1), std::move(p2)};
}

QMatrix scale_left(const Quaternion& s, const QMatrix& a) {
  // (s1 + s2 j)(A1 + A2 j) = (s1 A1 - s2 conj(A2)) + (s1 A2 + s2 conj(A1)) j
  const Complex s1 = s.first();
  const Complex s2 = s.second();
  return {s1 * a.q1() - s2 * a.q2().conjugate(), s1 * a.q2() + s2 * a.q1().conjugate()};
}

QMatrix hstack(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != b.rows()) {
    throw DimensionError("hstack: row counts differ, " + shape_string(a.rows(), a.cols()) +
                         " | " + shape_string(b.rows(), b.cols()));
  }
  CMatrix q1(a.q1().rows(), a.q1().cols() + b.q1().cols());
  CMatrix q2(q1.rows(), q1.cols());
  q1 << a.q1(), b.q1();
  q2 << a.q2(), b.q2();
  return {std::move(q1), std::move(q2)};
}

QMatrix vstack(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.cols()) {
    throw DimensionError("vstack: column counts differ, " + shape_string(a.rows(), a.cols()) +
                         " ; " + shape_string(b.rows(), b.cols()));
  }
  CMatrix q1(a.q1().rows() + b.q1().rows(), a.q1().cols());
  CMatrix q2(q1.rows(), q1.cols());
  q1 << a.q1(), b.q1();
  q2 << a.q2(), b.q2();
  return {std::move(q1), std::move(q2)};
}

double rel_diff(const QMatrix& a, const QMatrix& b) {
  const double diff = (a - b).fro_norm();
  const double scale = std::max(a.fro_norm(), b.fro_norm());
  if (scale == 0.0) return diff;
  return diff / scale;
}

}  // namespace quatinv
