#pragma once

#include <cstddef>
#include <vector>

#include "quatinv/qmatrix.hpp"
#include "quatinv/route.hpp"

namespace quatinv {

enum class FrdSide {
  column,  ///< A = F G with F = r pivot columns of A (m x r) and G (r x n).
  row,     ///< A = G F with F = r pivot rows of A (r x n) and G (m x r).
};

/// Full rank factorization of an m x n matrix of rank r.
///
/// `tall` always has full column rank r and `wide` full row rank r; for the
/// column form A = tall * wide, for the row form A = tall * wide as well
/// (tall = G2, wide = F2). rank 0 yields the empty factorization
/// (m x 0 and 0 x n factors).
struct FullRankFactorization {
  FrdSide side = FrdSide::column;
  QMatrix tall;
  QMatrix wide;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  ///< pivot columns (column form) or rows (row form) of A

  bool empty() const { return rank == 0; }
  QMatrix product() const;
  /// F and G in the naming of the chosen side.
  const QMatrix& f() const { return side == FrdSide::column ? tall : wide; }
  const QMatrix& g() const { return side == FrdSide::column ? wide : tall; }
};

/// Complete-pivoting quaternion Gaussian elimination, run for exactly
/// rank(A) steps. Route::direct eliminates with Hamilton products on a
/// quaternion array; Route::crep performs the same row operations on the
/// first block row [A1, A2] with complex arithmetic.
FullRankFactorization full_rank_decompose(const QMatrix& a, FrdSide side = FrdSide::column,
                                          Route route = Route::direct, double rtol = 0.0);

}  // namespace quatinv
