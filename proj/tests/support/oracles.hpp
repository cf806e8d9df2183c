#pragma once

// Reference computations built only on the complex representation and
// Eigen's dense complex solvers, kept independent of the library's own
// SVD, elimination and inverse code paths.

#include <Eigen/Dense>
#include <cstddef>
#include <utility>
#include <vector>

#include "quatinv/crep.hpp"
#include "quatinv/qmatrix.hpp"
#include "quatinv/random.hpp"

namespace quatinv::testing {

using DenseC = Eigen::MatrixXcd;

inline DenseC crep_of(const QMatrix& a) { return to_crep(a).data(); }

inline QMatrix from_dense(const DenseC& c) { return from_crep(CMatrix(c)); }

inline QMatrix pinv_oracle(const QMatrix& a) {
  return from_dense(Eigen::CompleteOrthogonalDecomposition<DenseC>(crep_of(a)).pseudoInverse());
}

inline QMatrix inverse_oracle(const QMatrix& a) {
  return from_dense(Eigen::FullPivLU<DenseC>(crep_of(a)).inverse());
}

/// Half the rank of A^C from a Jacobi SVD with threshold rtol * sigma_1.
inline std::size_t rank_oracle(const QMatrix& a, double rtol = 1e-10) {
  if (a.empty()) return 0;
  const Eigen::JacobiSVD<DenseC> svd(crep_of(a));
  const auto& s = svd.singularValues();
  if (s(0) == 0.0) return 0;
  std::size_t r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > rtol * s(0)) ++r;
  return r / 2;
}

/// Sorted singular values of A^C with every pair collapsed to one value.
inline std::vector<double> paired_singular_values(const QMatrix& a) {
  const Eigen::JacobiSVD<DenseC> svd(crep_of(a));
  const auto& s = svd.singularValues();
  std::vector<double> out;
  for (Eigen::Index i = 0; i + 1 < s.size(); i += 2) out.push_back(0.5 * (s(i) + s(i + 1)));
  return out;
}

inline QMatrix power(const QMatrix& a, std::size_t k) {
  QMatrix p = QMatrix::identity(a.rows());
  for (std::size_t i = 0; i < k; ++i) p = p * a;
  return p;
}

/// Well-conditioned random invertible matrix: random signed entries plus n I.
inline QMatrix random_invertible(std::size_t n, Rng& rng) {
  return random_signed(n, n, rng) + QMatrix::identity(n) * static_cast<double>(n);
}

/// Nilpotent matrix made of Jordan blocks of the given sizes (index = largest size).
inline QMatrix nilpotent(const std::vector<std::size_t>& blocks) {
  std::size_t n = 0;
  for (std::size_t b : blocks) n += b;
  QMatrix out(n, n);
  std::size_t off = 0;
  for (std::size_t b : blocks) {
    for (std::size_t i = 0; i + 1 < b; ++i) out.set(off + i, off + i + 1, Quaternion{1.0});
    off += b;
  }
  return out;
}

inline QMatrix block_diag(const QMatrix& a, const QMatrix& b) {
  QMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.set(i, j, a(i, j));
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out.set(a.rows() + i, a.cols() + j, b(i, j));
  return out;
}

/// A = P diag(B, N) P^{-1} with B invertible and N nilpotent; the Drazin
/// inverse is P diag(B^{-1}, 0) P^{-1} and the index is the largest Jordan block.
struct DrazinCase {
  QMatrix a;
  QMatrix drazin;
  std::size_t index = 0;
};

inline DrazinCase drazin_case(std::size_t n_invertible, const std::vector<std::size_t>& jordan,
                              Rng& rng) {
  const QMatrix b = random_invertible(n_invertible, rng);
  const QMatrix n = nilpotent(jordan);
  const std::size_t dim = n_invertible + n.rows();
  const QMatrix p = random_invertible(dim, rng);
  const QMatrix pinv = inverse_oracle(p);
  DrazinCase c;
  c.a = p * block_diag(b, n) * pinv;
  c.drazin = p * block_diag(inverse_oracle(b), QMatrix(n.rows(), n.rows())) * pinv;
  for (std::size_t s : jordan) c.index = std::max(c.index, s);
  if (jordan.empty()) c.index = 0;
  return c;
}

}  // namespace quatinv::testing
