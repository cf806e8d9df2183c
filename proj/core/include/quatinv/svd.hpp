#pragma once

#include <cstddef>

#include "quatinv/qarray.hpp"
#include "quatinv/qmatrix.hpp"
#include "quatinv/route.hpp"

namespace quatinv {

/// A = U diag(sigma) V^*, U (m x m) and V (n x n) unitary,
/// sigma nonincreasing and nonnegative with length min(m, n).
struct QSvdResult {
  QMatrix u;
  RVector sigma;
  QMatrix v;
  std::size_t rank = 0;

  /// U Sigma V^* (for checks).
  QMatrix reconstruct() const;
};

/// Quaternion SVD.
///
/// Route::crep computes the complex SVD of A^C and restores the quaternion
/// structure of the singular vectors (one representative per singular-value
/// pair, symplectic partner J^{-1} conj(u), joint re-orthonormalization).
/// Route::direct runs quaternion Householder bidiagonalization followed by
/// implicit-shift QR on the real bidiagonal.
QSvdResult qsvd(const QMatrix& a, Route route = Route::crep, double rtol = 0.0);

namespace direct {

struct Svd {
  QArray u;
  std::vector<double> sigma;
  QArray v;
};

Svd svd(const QArray& a);

/// In-place SVD of the real upper bidiagonal diag(d) + superdiag(e):
/// on return B = ub diag(d) vb^T with d >= 0 sorted nonincreasing.
void bidiagonal_svd(std::vector<double>& d, std::vector<double>& e, RMatrix& ub, RMatrix& vb);

}  // namespace direct

namespace crep {

/// Structure-restored SVD from the complex representation.
QSvdResult svd(const QMatrix& a, double rtol = 0.0);

}  // namespace crep

}  // namespace quatinv
