#pragma once

#include <cstddef>

#include "quatinv/qmatrix.hpp"

namespace quatinv {

/// Complex representation of an m x n quaternion matrix Q = Q1 + Q2 j:
///
///     Q^C = [  Q1        Q2      ]
///           [ -conj(Q2)  conj(Q1) ]      (2m x 2n)
///
/// Every CRep satisfies J_m C = conj(C) J_n with J_k = [[0, I_k], [-I_k, 0]].
/// The map Q -> Q^C is a real-linear ring homomorphism that commutes with
/// the conjugate transpose.
class CRep {
 public:
  CRep() = default;

  const CMatrix& data() const { return data_; }
  /// Quaternion dimensions (half of the complex ones).
  std::size_t m() const { return m_; }
  std::size_t n() const { return n_; }

 private:
  friend CRep to_crep(const QMatrix& a);
  friend CRep symmetrize_crep(const CMatrix& c0, std::size_t m, std::size_t n);
  CRep(CMatrix data, std::size_t m, std::size_t n) : data_(std::move(data)), m_(m), n_(n) {}

  CMatrix data_;
  std::size_t m_ = 0;
  std::size_t n_ = 0;
};

/// First block row [Q1, Q2] of Q^C (m x 2n).
class CRepRow {
 public:
  CRepRow() = default;
  explicit CRepRow(CMatrix data) : data_(std::move(data)) {}

  const CMatrix& data() const { return data_; }

 private:
  CMatrix data_;
};

CRep to_crep(const QMatrix& a);
CRepRow to_crep_row(const QMatrix& a);

/// Frobenius norm of J_m C - conj(C) J_n for a 2m x 2n complex matrix.
double symplectic_defect(const CMatrix& c);

/// Default acceptance threshold for from_crep: 1e-10 * max(1, ||C||_F).
double default_crep_tolerance(const CMatrix& c);

/// Recover Q from its complex representation.
///
/// Throws StructureError when the symplectic defect exceeds `tol`
/// (negative tol selects default_crep_tolerance) and DimensionError for odd
/// dimensions. The components are read from the symmetrized blocks, so an
/// exact representation round-trips bitwise.
QMatrix from_crep(const CMatrix& c, double tol = -1.0);
QMatrix from_crep(const CRep& c);

/// Recover Q from a first block row [Q1, Q2] with n quaternion columns.
QMatrix from_crep_row(const CMatrix& row, std::size_t n);

/// Orthogonal projection of a 2m x 2n complex matrix onto the set of complex
/// representations: C = 1/2 (C0 + J_m^{-1} conj(C0) J_n).
///
/// Fixed point on representations. If C0 is a one-sided inverse of some A^C
/// the projection stays one.
CRep symmetrize_crep(const CMatrix& c0, std::size_t m, std::size_t n);

/// J_k as a dense complex matrix (used by tests and the SVD pairing).
CMatrix symplectic_unit(std::size_t k);

}  // namespace quatinv
