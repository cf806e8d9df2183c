#include "quatinv/random.hpp"

#include "quatinv/svd.hpp"

namespace quatinv {

namespace {

QMatrix random_matrix(std::size_t rows, std::size_t cols, double lo, double hi, Rng& rng) {
  std::uniform_real_distribution<double> dist(lo, hi);
  QMatrix out(rows, cols);
  // Components drawn row-major in the order w, x, y, z.
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const double w = dist(rng);
      const double x = dist(rng);
      const double y = dist(rng);
      const double z = dist(rng);
      out.set(r, c, Quaternion{w, x, y, z});
    }
  }
  return out;
}

}  // namespace

QMatrix random_uniform(std::size_t rows, std::size_t cols, Rng& rng) {
  return random_matrix(rows, cols, 0.0, 1.0, rng);
}

QMatrix random_signed(std::size_t rows, std::size_t cols, Rng& rng) {
  return random_matrix(rows, cols, -1.0, 1.0, rng);
}

QMatrix random_with_rank(std::size_t rows, std::size_t cols, std::size_t r, Rng& rng) {
  const QMatrix b = random_signed(rows, r, rng);
  const QMatrix c = random_signed(r, cols, rng);
  return b * c;
}

QMatrix random_unitary(std::size_t n, Rng& rng) {
  return qsvd(random_signed(n, n, rng), Route::crep).u;
}

}  // namespace quatinv
