#include "quatinv/qarray.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "quatinv/errors.hpp"

namespace quatinv::direct {

QArray QArray::identity(std::size_t n) {
  QArray out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = units::one;
  return out;
}

void QArray::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(row_ptr(a), row_ptr(a) + cols_, row_ptr(b));
}

void QArray::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

QArray QArray::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) {
    throw DimensionError("QArray::block out of range");
  }
  QArray out(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
  return out;
}

QArray from_qmatrix(const QMatrix& a) {
  QArray out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
  return out;
}

QMatrix to_qmatrix(const QArray& a) {
  QMatrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out.set(r, c, a(r, c));
  return out;
}

QArray matmul(const QArray& a, const QArray& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("direct::matmul: inner dimensions differ, " +
                         shape_string(a.rows(), a.cols()) + " * " +
                         shape_string(b.rows(), b.cols()));
  }
  QArray out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Quaternion* orow = out.row_ptr(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Quaternion aik = a(i, k);
      const Quaternion* brow = b.row_ptr(k);
      for (std::size_t j = 0; j < b.cols(); ++j) orow[j] += aik * brow[j];
    }
  }
  return out;
}

QArray conj_transpose(const QArray& a) {
  QArray out(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(c, r) = a(r, c).conj();
  return out;
}

double fro_norm(const QArray& a) {
  double s = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) s += a(r, c).norm2();
  return std::sqrt(s);
}

std::optional<QArray> inverse(const QArray& a, double rel_tol) {
  if (a.rows() != a.cols()) {
    throw DimensionError("direct::inverse: matrix is " + shape_string(a.rows(), a.cols()));
  }
  const std::size_t n = a.rows();
  QArray work = a;
  QArray inv = QArray::identity(n);
  double scale = 0.0;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) scale = std::max(scale, work(r, c).abs());
  if (n > 0 && scale == 0.0) return std::nullopt;

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    double best = work(k, k).abs();
    for (std::size_t i = k + 1; i < n; ++i) {
      const double v = work(i, k).abs();
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (best <= rel_tol * scale) return std::nullopt;
    work.swap_rows(k, piv);
    inv.swap_rows(k, piv);

    const Quaternion pinv = quatinv::inverse(work(k, k));
    for (std::size_t j = 0; j < n; ++j) {
      work(k, j) = pinv * work(k, j);
      inv(k, j) = pinv * inv(k, j);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      const Quaternion f = work(i, k);
      if (f == Quaternion{}) continue;
      for (std::size_t j = 0; j < n; ++j) {
        work(i, j) -= f * work(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

Reflector make_reflector(const std::vector<Quaternion>& x) {
  Reflector h;
  h.v = x;
  double norm2 = 0.0;
  for (const auto& q : x) norm2 += q.norm2();
  if (x.empty() || norm2 == 0.0) {
    h.tau = 0.0;
    h.alpha = Quaternion{};
    return h;
  }
  const double norm = std::sqrt(norm2);
  const Quaternion u = unit_or_one(x[0]);
  h.alpha = -(u * norm);
  h.v[0] = x[0] + u * norm;
  // v^* v = 2 ||x|| (||x|| + |x_0|)
  h.tau = 1.0 / (norm * (norm + x[0].abs()));
  return h;
}

void apply_left(QArray& a, const Reflector& h, std::size_t r0, std::size_t c0) {
  if (h.tau == 0.0) return;
  const std::size_t k = h.v.size();
  std::vector<Quaternion> w(a.cols() - c0);
  for (std::size_t i = 0; i < k; ++i) {
    const Quaternion vc = h.v[i].conj();
    const Quaternion* row = a.row_ptr(r0 + i);
    for (std::size_t j = c0; j < a.cols(); ++j) w[j - c0] += vc * row[j];
  }
  for (auto& q : w) q *= h.tau;
  for (std::size_t i = 0; i < k; ++i) {
    const Quaternion vi = h.v[i];
    Quaternion* row = a.row_ptr(r0 + i);
    for (std::size_t j = c0; j < a.cols(); ++j) row[j] -= vi * w[j - c0];
  }
}

void apply_right(QArray& a, const Reflector& h, std::size_t r0, std::size_t c0) {
  if (h.tau == 0.0) return;
  const std::size_t k = h.v.size();
  std::vector<Quaternion> vc(k);
  for (std::size_t j = 0; j < k; ++j) vc[j] = h.v[j].conj() * h.tau;
  for (std::size_t r = r0; r < a.rows(); ++r) {
    Quaternion* row = a.row_ptr(r);
    Quaternion z;
    for (std::size_t j = 0; j < k; ++j) z += row[c0 + j] * h.v[j];
    for (std::size_t j = 0; j < k; ++j) row[c0 + j] -= z * vc[j];
  }
}

}  // namespace quatinv::direct
