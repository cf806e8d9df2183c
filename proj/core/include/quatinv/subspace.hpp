#pragma once

#include "quatinv/qmatrix.hpp"

namespace quatinv {

/// Relative rank tolerance used by the subspace tests. Computed inverses carry
/// rounding of order 1e-13 relative, which the tight factor threshold would
/// count as an extra direction.
inline constexpr double kSubspaceRtol = 1e-9;

/// R_r(X) = R_r(S): rank[S | X] = rank S = rank X.
bool right_range_equal(const QMatrix& x, const QMatrix& s, double rtol = kSubspaceRtol);
/// N_r(X) = N_r(T): rank[T ; X] = rank T = rank X.
bool right_null_equal(const QMatrix& x, const QMatrix& t, double rtol = kSubspaceRtol);
/// R_l(X) = R_l(S): rank[S ; X] = rank S = rank X.
bool left_range_equal(const QMatrix& x, const QMatrix& s, double rtol = kSubspaceRtol);
/// N_l(X) = N_l(T): rank[T | X] = rank T = rank X.
bool left_null_equal(const QMatrix& x, const QMatrix& t, double rtol = kSubspaceRtol);

}  // namespace quatinv
