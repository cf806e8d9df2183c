#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <initializer_list>
#include <span>

#include "quatinv/quaternion.hpp"

namespace quatinv {

using CMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using RMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using RVector = Eigen::VectorXd;

/// Dense quaternion matrix Q = Q1 + Q2 j stored as its two complex components.
///
/// Element (r, c) is the quaternion (Re Q1, Im Q1, Re Q2, Im Q2) at (r, c).
/// Storage is row-major. A default-constructed matrix is 0x0.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols);
  QMatrix(CMatrix q1, CMatrix q2);

  static QMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static QMatrix identity(std::size_t n);
  /// Row-major list of quaternions; throws DimensionError if the count is wrong.
  static QMatrix from_quaternions(std::size_t rows, std::size_t cols,
                                  std::span<const Quaternion> values);
  static QMatrix from_quaternions(std::size_t rows, std::size_t cols,
                                  std::initializer_list<Quaternion> values);
  /// Real matrix embedded as the w component.
  static QMatrix from_real(const RMatrix& re);
  /// Pure quaternion matrix xi + yj + zk built from three real planes.
  static QMatrix from_imaginary(const RMatrix& x, const RMatrix& y, const RMatrix& z);

  std::size_t rows() const { return static_cast<std::size_t>(q1_.rows()); }
  std::size_t cols() const { return static_cast<std::size_t>(q1_.cols()); }
  std::size_t size() const { return rows() * cols(); }
  bool empty() const { return size() == 0; }

  const CMatrix& q1() const { return q1_; }
  const CMatrix& q2() const { return q2_; }

  Quaternion operator()(std::size_t r, std::size_t c) const {
    return Quaternion::from_pair(q1_(r, c), q2_(r, c));
  }
  void set(std::size_t r, std::size_t c, const Quaternion& q) {
    q1_(r, c) = q.first();
    q2_(r, c) = q.second();
  }

  /// Real planes of the four components.
  RMatrix real_part() const { return q1_.real(); }
  RMatrix i_part() const { return q1_.imag(); }
  RMatrix j_part() const { return q2_.real(); }
  RMatrix k_part() const { return q2_.imag(); }

  QMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  QMatrix col(std::size_t c) const { return block(0, c, rows(), 1); }
  QMatrix row(std::size_t r) const { return block(r, 0, 1, cols()); }

  QMatrix conj_transpose() const;
  double fro_norm() const;
  double fro_norm2() const;

  QMatrix& operator+=(const QMatrix& o);
  QMatrix& operator-=(const QMatrix& o);
  QMatrix& operator*=(double s);

  bool operator==(const QMatrix& o) const;

 private:
  CMatrix q1_;
  CMatrix q2_;
};

QMatrix operator+(QMatrix a, const QMatrix& b);
QMatrix operator-(QMatrix a, const QMatrix& b);
QMatrix operator-(const QMatrix& a);
QMatrix operator*(QMatrix a, double s);
QMatrix operator*(double s, QMatrix a);

/// Quaternion matrix product via the component identity
/// (A1 + A2 j)(B1 + B2 j) = (A1 B1 - A2 conj(B2)) + (A1 B2 + A2 conj(B1)) j.
QMatrix mat_mul(const QMatrix& a, const QMatrix& b);
inline QMatrix operator*(const QMatrix& a, const QMatrix& b) { return mat_mul(a, b); }

/// Left multiplication by a quaternion scalar: (s A)_{rc} = s * A_{rc}.
QMatrix scale_left(const Quaternion& s, const QMatrix& a);

inline QMatrix conj_transpose(const QMatrix& a) { return a.conj_transpose(); }
inline double fro_norm(const QMatrix& a) { return a.fro_norm(); }

/// [A | B]
QMatrix hstack(const QMatrix& a, const QMatrix& b);
/// [A ; B]
QMatrix vstack(const QMatrix& a, const QMatrix& b);

/// ||A - B||_F / max(||A||_F, tiny); plain ||A - B||_F when both are zero.
double rel_diff(const QMatrix& a, const QMatrix& b);

}  // namespace quatinv
