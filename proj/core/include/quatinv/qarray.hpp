#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "quatinv/qmatrix.hpp"
#include "quatinv/quaternion.hpp"

namespace quatinv::direct {

/// Row-major array of Quaternion values. Every kernel in this namespace
/// works with Hamilton products on it; nothing here goes through the
/// complex representation. This is the "direct arithmetic" route.
class QArray {
 public:
  QArray() = default;
  QArray(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static QArray identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Quaternion& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Quaternion& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Quaternion* row_ptr(std::size_t r) { return data_.data() + r * cols_; }
  const Quaternion* row_ptr(std::size_t r) const { return data_.data() + r * cols_; }

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);

  QArray block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Quaternion> data_;
};

QArray from_qmatrix(const QMatrix& a);
QMatrix to_qmatrix(const QArray& a);

QArray matmul(const QArray& a, const QArray& b);
QArray conj_transpose(const QArray& a);
double fro_norm(const QArray& a);

/// Gauss-Jordan inverse with partial pivoting on |a_ij|.
/// Returns nullopt when a pivot falls below `rel_tol * max|a_ij|`.
std::optional<QArray> inverse(const QArray& a, double rel_tol = 1e-14);

/// Householder reflector H = I - tau v v^* with H x = alpha e_1, |alpha| = ||x||.
struct Reflector {
  std::vector<Quaternion> v;
  double tau = 0.0;
  Quaternion alpha;
};

Reflector make_reflector(const std::vector<Quaternion>& x);

/// A(r0:, c0:) <- H A(r0:, c0:)
void apply_left(QArray& a, const Reflector& h, std::size_t r0, std::size_t c0);
/// A(r0:, c0:) <- A(r0:, c0:) H
void apply_right(QArray& a, const Reflector& h, std::size_t r0, std::size_t c0);

}  // namespace quatinv::direct
