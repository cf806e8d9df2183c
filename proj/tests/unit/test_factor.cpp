#include "doctest.h"
#include "quatinv/errors.hpp"
#include "quatinv/frd.hpp"
#include "quatinv/geninv.hpp"
#include "quatinv/one_inverse.hpp"
#include "quatinv/rank.hpp"
#include "quatinv/svd.hpp"
#include "support/oracles.hpp"

using namespace quatinv;

namespace {

const Route kRoutes[] = {Route::direct, Route::crep};

// [[1, j], [i, k]]: the second row is i times the first.
QMatrix rank_one_example() {
  return QMatrix::from_quaternions(2, 2, {units::one, units::j, units::i, units::k});
}

}  // namespace

TEST_CASE("rank") {
  CHECK(rank(QMatrix(3, 4)) == 0);
  CHECK(rank(rank_one_example()) == 1);

  Rng rng(1);
  const QMatrix u = random_signed(4, 1, rng);
  const QMatrix v = random_signed(3, 1, rng);
  CHECK(rank(u * v.conj_transpose()) == 1);

  for (std::size_t r = 1; r <= 5; ++r) {
    const QMatrix a = random_with_rank(7, 6, r, rng);
    CHECK(rank(a) == r);
    CHECK(rank(a) == testing::rank_oracle(a));
  }
  CHECK(rank(QMatrix::identity(5)) == 5);
}

TEST_CASE("singular values match the paired complex singular values") {
  Rng rng(2);
  const QMatrix a = random_signed(6, 4, rng);
  const RVector s = singular_values(a);
  const std::vector<double> ref = testing::paired_singular_values(a);
  REQUIRE(static_cast<std::size_t>(s.size()) == 4);
  for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(s(i) - ref[i]) <= 1e-12 * ref[0]);
}

TEST_CASE("qsvd small examples") {
  for (Route route : kRoutes) {
    INFO(std::string(to_string(route)));
    RMatrix d(2, 2);
    d << 2.0, 0.0, 0.0, 1.0;
    const QSvdResult s = qsvd(QMatrix::from_real(d), route);
    CHECK(s.sigma(0) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(s.sigma(1) == doctest::Approx(1.0).epsilon(1e-15));
    for (std::size_t i = 0; i < 2; ++i) {
      CHECK(s.u(i, i).abs() == doctest::Approx(1.0).epsilon(1e-14));
      CHECK(s.v(i, i).abs() == doctest::Approx(1.0).epsilon(1e-14));
    }

    const QSvdResult sj = qsvd(QMatrix::from_quaternions(1, 1, {units::j}), route);
    CHECK(sj.sigma(0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(sj.rank == 1);
  }
}

TEST_CASE("qsvd reconstruction, unitarity and ordering") {
  Rng rng(3);
  const std::pair<std::size_t, std::size_t> shapes[] = {{1, 1}, {5, 3}, {3, 5}, {8, 8},
                                                        {20, 12}, {12, 20}, {64, 40}};
  for (Route route : kRoutes) {
    for (auto [m, n] : shapes) {
      CAPTURE(m);
      CAPTURE(n);
      INFO(std::string(to_string(route)));
      const QMatrix a = random_signed(m, n, rng);
      const QSvdResult s = qsvd(a, route);
      CHECK(rel_diff(s.reconstruct(), a) <= 1e-11);
      CHECK((s.u.conj_transpose() * s.u - QMatrix::identity(m)).fro_norm() <= 1e-11);
      CHECK((s.v.conj_transpose() * s.v - QMatrix::identity(n)).fro_norm() <= 1e-11);
      for (Eigen::Index i = 0; i + 1 < s.sigma.size(); ++i) CHECK(s.sigma(i) >= s.sigma(i + 1));
      CHECK(s.sigma.minCoeff() >= 0.0);
      CHECK(s.rank == std::min(m, n));
    }
  }
}

TEST_CASE("qsvd of rank-deficient matrices keeps full unitary factors") {
  Rng rng(4);
  for (Route route : kRoutes) {
    const QMatrix a = random_with_rank(9, 7, 3, rng);
    const QSvdResult s = qsvd(a, route);
    CHECK(s.rank == 3);
    CHECK(rel_diff(s.reconstruct(), a) <= 1e-11);
    CHECK((s.u.conj_transpose() * s.u - QMatrix::identity(9)).fro_norm() <= 1e-11);
    CHECK((s.v.conj_transpose() * s.v - QMatrix::identity(7)).fro_norm() <= 1e-11);
  }
  // Repeated singular values.
  for (int t = 0; t < 20; ++t) {
    const QMatrix q = random_unitary(6, rng);
    for (Route route : kRoutes) {
      const QSvdResult s = qsvd(q, route);
      CHECK(rel_diff(s.reconstruct(), q) <= 1e-12);
      for (Eigen::Index i = 0; i < 6; ++i) CHECK(s.sigma(i) == doctest::Approx(1.0).epsilon(1e-13));
    }
    // Two clusters of multiplicity three.
    RMatrix d = RMatrix::Zero(7, 6);
    for (int i = 0; i < 6; ++i) d(i, i) = i < 3 ? 2.0 : 0.5;
    const QMatrix c = random_unitary(7, rng) * QMatrix::from_real(d) * random_unitary(6, rng);
    for (Route route : kRoutes) {
      const QSvdResult s = qsvd(c, route);
      CHECK(rel_diff(s.reconstruct(), c) <= 1e-12);
      CHECK(s.sigma(2) == doctest::Approx(2.0).epsilon(1e-13));
      CHECK(s.sigma(3) == doctest::Approx(0.5).epsilon(1e-13));
    }
  }
}

TEST_CASE("full rank decomposition examples") {
  for (Route route : kRoutes) {
    INFO(std::string(to_string(route)));
    Rng rng(5);
    const QMatrix tall = random_signed(6, 3, rng);
    const FullRankFactorization f0 = full_rank_decompose(tall, FrdSide::column, route);
    CHECK(f0.rank == 3);
    CHECK(rel_diff(f0.product(), tall) <= 1e-13);

    const QMatrix r1 = rank_one_example();
    const FullRankFactorization f1 = full_rank_decompose(r1, FrdSide::column, route);
    CHECK(f1.rank == 1);
    CHECK((f1.product() - r1).fro_norm() <= 1e-14 * r1.fro_norm());

    const QMatrix a = random_signed(5, 2, rng) * random_signed(2, 6, rng);
    for (FrdSide side : {FrdSide::column, FrdSide::row}) {
      const FullRankFactorization f = full_rank_decompose(a, side, route);
      CHECK(f.rank == 2);
      CHECK(rel_diff(f.product(), a) <= 1e-12);
      CHECK(f.tall.rows() == 5);
      CHECK(f.tall.cols() == 2);
      CHECK(f.wide.rows() == 2);
      CHECK(f.wide.cols() == 6);
      CHECK(testing::rank_oracle(f.tall) == 2);
      CHECK(testing::rank_oracle(f.wide) == 2);
    }

    const FullRankFactorization z = full_rank_decompose(QMatrix(3, 4), FrdSide::column, route);
    CHECK(z.empty());
    CHECK(z.tall.rows() == 3);
    CHECK(z.tall.cols() == 0);
    CHECK(z.wide.cols() == 4);
  }
}

TEST_CASE("full rank factors carry the range and null spaces of A") {
  Rng rng(6);
  for (Route route : kRoutes) {
    for (int t = 0; t < 10; ++t) {
      const QMatrix a = random_with_rank(7, 6, 3, rng);
      const FullRankFactorization c = full_rank_decompose(a, FrdSide::column, route);
      CHECK(testing::rank_oracle(hstack(c.f(), a)) == 3);
      CHECK(testing::rank_oracle(vstack(c.g(), a)) == 3);
      const FullRankFactorization r = full_rank_decompose(a, FrdSide::row, route);
      CHECK(testing::rank_oracle(vstack(r.f(), a)) == 3);
      CHECK(testing::rank_oracle(hstack(r.g(), a)) == 3);
      CHECK(rel_diff(c.product(), a) <= 1e-12);
      CHECK(rel_diff(r.product(), a) <= 1e-12);
    }
  }
}

TEST_CASE("full rank decomposition routes agree") {
  Rng rng(7);
  const QMatrix a = random_with_rank(8, 5, 4, rng);
  const FullRankFactorization d = full_rank_decompose(a, FrdSide::column, Route::direct);
  const FullRankFactorization c = full_rank_decompose(a, FrdSide::column, Route::crep);
  CHECK(d.pivots == c.pivots);
  CHECK(rel_diff(d.wide, c.wide) <= 1e-12);
  CHECK(d.tall == c.tall);
}

TEST_CASE("one_inverse with zero blocks is the Moore-Penrose inverse") {
  Rng rng(8);
  for (Route route : kRoutes) {
    const QMatrix w = random_with_rank(5, 4, 3, rng);
    const QMatrix x = one_inverse(w, FreeBlocks{}, route);
    const auto res = penrose_residuals(w, x);
    for (const auto& [name, v] : res) {
      CAPTURE(name);
      CHECK(v <= 1e-12 * w.fro_norm());
    }
    CHECK(rel_diff(x, testing::pinv_oracle(w)) <= 1e-10);
  }
}

TEST_CASE("one_inverse of an invertible matrix is its inverse") {
  Rng rng(9);
  const QMatrix w = testing::random_invertible(4, rng);
  for (Route route : kRoutes) {
    CHECK(rel_diff(one_inverse(w, FreeBlocks{true, 3}, route), testing::inverse_oracle(w)) <= 1e-13);
    CHECK(rel_diff(one_inverse(w, QMatrix(4, 0), QMatrix(0, 4), QMatrix(0, 0), route),
                   testing::inverse_oracle(w)) <= 1e-13);
  }
}

TEST_CASE("one_inverse free blocks give distinct {1}-inverses") {
  Rng rng(10);
  const QMatrix w = random_with_rank(4, 3, 2, rng);
  for (Route route : kRoutes) {
    const QMatrix x1 = one_inverse(w, FreeBlocks{true, 1}, route);
    const QMatrix x2 = one_inverse(w, FreeBlocks{true, 2}, route);
    CHECK((w * x1 * w - w).fro_norm() <= 1e-11 * w.fro_norm());
    CHECK((w * x2 * w - w).fro_norm() <= 1e-11 * w.fro_norm());
    CHECK(rel_diff(x1, x2) > 1e-3);
    CHECK(x1.rows() == 3);
    CHECK(x1.cols() == 4);
  }
}

TEST_CASE("one_inverse postcondition for explicit random blocks") {
  Rng rng(11);
  std::uniform_int_distribution<std::size_t> dim(1, 7);
  for (int t = 0; t < 50; ++t) {
    const std::size_t q = dim(rng), p = dim(rng);
    const std::size_t s = std::uniform_int_distribution<std::size_t>(1, std::min(p, q))(rng);
    const QMatrix w = random_with_rank(q, p, s, rng);
    const QMatrix k = random_uniform(s, q - s, rng);
    const QMatrix l = random_uniform(p - s, s, rng);
    const QMatrix m = random_uniform(p - s, q - s, rng);
    const Route route = t % 2 == 0 ? Route::direct : Route::crep;
    const QMatrix x = one_inverse(w, k, l, m, route);
    CHECK((w * x * w - w).fro_norm() <= 1e-10 * w.fro_norm());
  }
}

TEST_CASE("one_inverse validates block shapes and handles rank zero") {
  Rng rng(12);
  const QMatrix w = random_with_rank(4, 3, 2, rng);
  CHECK_THROWS_AS(one_inverse(w, QMatrix(2, 1), QMatrix(1, 2), QMatrix(1, 2)), DimensionError);
  CHECK_THROWS_AS(one_inverse(w, QMatrix(2, 2), QMatrix(2, 2), QMatrix(1, 2)), DimensionError);
  const QMatrix z = one_inverse(QMatrix(3, 2));
  CHECK(z.rows() == 2);
  CHECK(z.cols() == 3);
  CHECK(z.fro_norm() == 0.0);
}
