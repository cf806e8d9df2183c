#pragma once

#include <cstddef>

#include "quatinv/qmatrix.hpp"

namespace quatinv {

/// Threshold below which a quaternion singular value counts as zero.
/// `rtol <= 0` selects the default max(m, n) * eps.
double rank_threshold(double sigma_max, std::size_t m, std::size_t n, double rtol = 0.0);

/// Singular values of A (nonincreasing, length min(m, n)), read off the
/// complex representation A^C whose singular values come in equal pairs.
RVector singular_values(const QMatrix& a);

/// Numerical rank: half the numerical rank of A^C, counted on the
/// deduplicated singular values so the result is always integral.
std::size_t rank(const QMatrix& a, double rtol = 0.0);

}  // namespace quatinv
