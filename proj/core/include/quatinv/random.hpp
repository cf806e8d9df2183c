#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "quatinv/qmatrix.hpp"

namespace quatinv {

using Rng = std::mt19937_64;

/// All four components i.i.d. uniform on [0, 1).
QMatrix random_uniform(std::size_t rows, std::size_t cols, Rng& rng);

/// All four components i.i.d. uniform on [-1, 1).
QMatrix random_signed(std::size_t rows, std::size_t cols, Rng& rng);

/// Product of random rows x r and r x cols factors (rank r almost surely).
QMatrix random_with_rank(std::size_t rows, std::size_t cols, std::size_t r, Rng& rng);

/// Random unitary n x n matrix (left singular vectors of a random matrix).
QMatrix random_unitary(std::size_t n, Rng& rng);

}  // namespace quatinv
