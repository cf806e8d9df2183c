#include "doctest.h"
#include "quatinv/errors.hpp"
#include "quatinv/geninv.hpp"
#include "quatinv/rank.hpp"
#include "quatinv/special.hpp"
#include "quatinv/subspace.hpp"
#include "support/oracles.hpp"

using namespace quatinv;

namespace {

const Route kRoutes[] = {Route::direct, Route::crep};

GenInvOptions with_route(Route r) {
  GenInvOptions o;
  o.route = r;
  return o;
}

void check_all_flags(const Classification& f) {
  CHECK(f.is_one_inverse);
  CHECK(f.is_outer);
  CHECK(f.range_matches);
  CHECK(f.nullspace_matches);
  CHECK(f.unique_outer);
  CHECK(f.is_12_unique);
}

void check_penrose(const QMatrix& a, const QMatrix& x, double tol) {
  for (const auto& [name, v] : penrose_residuals(a, x)) {
    INFO(name);
    CHECK(v <= tol);
  }
}

}  // namespace

TEST_CASE("outer_right with identity generators inverts an invertible matrix") {
  Rng rng(1);
  const QMatrix a = testing::random_invertible(4, rng);
  const QMatrix id = QMatrix::identity(4);
  for (Route route : kRoutes) {
    const InverseReport rep = outer_right(a, id, id, with_route(route));
    CHECK(rel_diff(rep.x, testing::inverse_oracle(a)) <= 1e-13);
    check_all_flags(rep.flags);
    CHECK(rep.exists);
    CHECK_FALSE(rep.degenerate);
    CHECK(rep.subspace_checks.at("right_range"));
    CHECK(rep.subspace_checks.at("right_null"));
  }
}

TEST_CASE("outer_right with S = T = A* is the Moore-Penrose inverse") {
  Rng rng(2);
  const QMatrix a = random_uniform(6, 4, rng);
  const QMatrix as = a.conj_transpose();
  for (Route route : kRoutes) {
    const InverseReport rep = outer_right(a, as, as, with_route(route));
    check_penrose(a, rep.x, 1e-10);
    CHECK(rel_diff(rep.x, testing::pinv_oracle(a)) <= 1e-10);
    check_all_flags(rep.flags);
  }
}

TEST_CASE("outer_right on a constructed rank-deficient instance") {
  Rng rng(3);
  for (Route route : kRoutes) {
    for (int t = 0; t < 5; ++t) {
      const QMatrix a = random_with_rank(9, 6, 4, rng);
      const QMatrix s1 = random_uniform(6, 3, rng);
      const QMatrix t1 = random_uniform(3, 9, rng);
      REQUIRE(testing::rank_oracle(t1 * a * s1) == 3);
      const InverseReport rep = outer_right(a, s1, t1, with_route(route));
      CHECK((rep.x * a * rep.x - rep.x).fro_norm() <= 1e-10 * rep.x.fro_norm());
      CHECK(testing::rank_oracle(rep.x) == 3);
      CHECK(rep.ranks.nu == 4);
      CHECK(rep.ranks.tas == 3);
      CHECK(rep.flags.unique_outer);
      CHECK_FALSE(rep.flags.is_one_inverse);
      CHECK(rep.subspace_checks.at("right_range"));
      CHECK(rep.subspace_checks.at("right_null"));
    }
  }
}

TEST_CASE("outer_right classification when only one generator matches") {
  Rng rng(4);
  // rank(TAS) = rank(T) = 2 < rank(S) = 3: the null space is prescribed, the range is not.
  const QMatrix a = random_uniform(6, 5, rng);
  const QMatrix s = random_uniform(5, 3, rng);
  const QMatrix t = random_uniform(2, 6, rng);
  const InverseReport rep = outer_right(a, s, t);
  CHECK(rep.ranks.s == 3);
  CHECK(rep.ranks.t == 2);
  CHECK(rep.ranks.tas == 2);
  CHECK(rep.flags.nullspace_matches);
  CHECK_FALSE(rep.flags.range_matches);
  CHECK(rep.flags.is_outer);
  CHECK_FALSE(rep.flags.unique_outer);
  CHECK(rep.residuals.at("outer") <= 1e-10 * rep.x.fro_norm());
}

TEST_CASE("outer_right with a rank-zero core returns zero and flags it") {
  Rng rng(5);
  const QMatrix a = random_uniform(4, 3, rng);
  const InverseReport rep = outer_right(a, random_uniform(3, 2, rng), QMatrix(2, 4));
  CHECK(rep.degenerate);
  CHECK(rep.x.fro_norm() == 0.0);
  CHECK(rep.x.rows() == 3);
  CHECK(rep.x.cols() == 4);
}

TEST_CASE("outer_right rejects non-conforming generators") {
  Rng rng(6);
  const QMatrix a = random_uniform(4, 3, rng);
  CHECK_THROWS_AS(outer_right(a, random_uniform(4, 2, rng), random_uniform(2, 4, rng)),
                  DimensionError);
  CHECK_THROWS_AS(outer_right(a, random_uniform(3, 2, rng), random_uniform(2, 3, rng)),
                  DimensionError);
}

TEST_CASE("Urquhart representation does not depend on the free blocks when unique") {
  Rng rng(7);
  const QMatrix a = random_with_rank(8, 6, 5, rng);
  const QMatrix s = random_uniform(6, 3, rng);
  const QMatrix t = random_uniform(3, 8, rng);
  for (Route route : kRoutes) {
    GenInvOptions o1 = with_route(route);
    o1.free_blocks = FreeBlocks{true, 1};
    GenInvOptions o2 = with_route(route);
    o2.free_blocks = FreeBlocks{true, 2};
    const InverseReport r1 = outer_right(a, s, t, o1);
    const InverseReport r2 = outer_right(a, s, t, o2);
    REQUIRE(r1.flags.unique_outer);
    CHECK(rel_diff(r1.x, r2.x) <= 1e-10);
  }
}

TEST_CASE("outer_left") {
  Rng rng(8);
  const QMatrix a = testing::random_invertible(3, rng);
  const QMatrix id = QMatrix::identity(3);
  const QMatrix b = random_uniform(5, 7, rng);
  const QMatrix bs = b.conj_transpose();
  for (Route route : kRoutes) {
    CHECK(rel_diff(outer_left(a, id, id, with_route(route)).x, testing::inverse_oracle(a)) <= 1e-13);
    const InverseReport rep = outer_left(b, bs, bs, with_route(route));
    CHECK(rep.side == Side::left);
    check_penrose(b, rep.x, 1e-10);
    CHECK(rep.subspace_checks.at("left_range"));
    CHECK(rep.subspace_checks.at("left_null"));
  }
}

TEST_CASE("outer_both") {
  Rng rng(9);
  const QMatrix a = testing::random_invertible(3, rng);
  const QMatrix g = random_with_rank(6, 5, 3, rng);
  for (Route route : kRoutes) {
    const InverseReport inv = outer_both(a, a.conj_transpose(), a.conj_transpose(), with_route(route));
    CHECK(rel_diff(inv.x, testing::inverse_oracle(a)) <= 1e-12);
    const InverseReport mp = outer_both(g, g.conj_transpose(), g.conj_transpose(), with_route(route));
    CHECK(rel_diff(mp.x, testing::pinv_oracle(g)) <= 1e-9);
    CHECK(mp.has_left);
    CHECK(mp.sides_agree);
  }

  const testing::DrazinCase dc = testing::drazin_case(3, {2}, rng);
  const QMatrix ak = testing::power(dc.a, dc.index);
  for (Route route : kRoutes) {
    const InverseReport rep = outer_both(dc.a, ak, ak, with_route(route));
    CHECK(rel_diff(rep.x, dc.drazin) <= 1e-9);
    CHECK(rel_diff(rep.x, drazin(dc.a, route).x) <= 1e-9);
    CHECK(rep.sides_agree);
  }
}

TEST_CASE("outer_w_right") {
  Rng rng(10);
  const QMatrix a = random_uniform(6, 4, rng);
  const QMatrix inv_a = testing::random_invertible(4, rng);
  for (Route route : kRoutes) {
    const InverseReport mp = outer_w_right(a, a.conj_transpose(), with_route(route));
    CHECK(mp.exists);
    check_penrose(a, mp.x, 1e-10);
    CHECK(rel_diff(mp.x, testing::pinv_oracle(a)) <= 1e-10);

    const InverseReport inv = outer_w_right(inv_a, QMatrix::identity(4), with_route(route));
    CHECK(rel_diff(inv.x, testing::inverse_oracle(inv_a)) <= 1e-13);
  }

  for (int t = 0; t < 5; ++t) {
    const QMatrix b = random_with_rank(6, 4, 3, rng);
    const QMatrix w = random_uniform(4, 2, rng) * random_uniform(2, 6, rng);
    for (Route route : kRoutes) {
      const InverseReport rep = outer_w_right(b, w, with_route(route));
      REQUIRE(rep.exists);
      CHECK((rep.x * b * rep.x - rep.x).fro_norm() <= 1e-10 * rep.x.fro_norm());
      CHECK(right_range_equal(rep.x, w));
      CHECK(right_null_equal(rep.x, w));
    }
  }
}

TEST_CASE("outer_w_left") {
  Rng rng(11);
  const QMatrix a = random_uniform(5, 3, rng);
  const QMatrix inv_a = testing::random_invertible(3, rng);
  for (Route route : kRoutes) {
    check_penrose(a, outer_w_left(a, a.conj_transpose(), with_route(route)).x, 1e-10);
    CHECK(rel_diff(outer_w_left(inv_a, QMatrix::identity(3), with_route(route)).x,
                   testing::inverse_oracle(inv_a)) <= 1e-13);
    const QMatrix b = random_with_rank(6, 4, 3, rng);
    const QMatrix w = random_uniform(4, 2, rng) * random_uniform(2, 6, rng);
    const InverseReport rep = outer_w_left(b, w, with_route(route));
    REQUIRE(rep.exists);
    CHECK(left_range_equal(rep.x, w));
    CHECK(left_null_equal(rep.x, w));
    CHECK((rep.x * b * rep.x - rep.x).fro_norm() <= 1e-10 * rep.x.fro_norm());
  }
}

TEST_CASE("W-route reports a singular core as non-existence") {
  const QMatrix a = QMatrix::from_quaternions(2, 2, {units::one, {}, {}, {}});
  const QMatrix w = QMatrix::from_quaternions(2, 2, {{}, {}, units::one, {}});
  for (Route route : kRoutes) {
    const InverseReport rep = outer_w_right(a, w, with_route(route));
    CHECK_FALSE(rep.exists);
    CHECK_FALSE(rep.message.empty());
    CHECK_FALSE(outer_w_left(a, w, with_route(route)).exists);
  }
}

TEST_CASE("pinv small examples") {
  for (PinvAlgorithm alg : {PinvAlgorithm::svd_direct, PinvAlgorithm::svd_crep,
                            PinvAlgorithm::frd_direct, PinvAlgorithm::frd_crep}) {
    INFO(std::string(to_string(alg)));
    const QMatrix two = pinv(QMatrix::from_quaternions(1, 1, {Quaternion{2.0}}), alg);
    CHECK((two(0, 0) - Quaternion{0.5}).abs() <= 1e-15);
    const QMatrix ii = pinv(QMatrix::from_quaternions(1, 1, {units::i}), alg);
    CHECK((ii(0, 0) - Quaternion{0, -1, 0, 0}).abs() <= 1e-15);
    const QMatrix z = pinv(QMatrix(3, 2), alg);
    CHECK(z.rows() == 2);
    CHECK(z.cols() == 3);
    CHECK(z.fro_norm() == 0.0);
  }
}

TEST_CASE("pinv realizations agree with the complex oracle") {
  Rng rng(12);
  const QMatrix a = random_uniform(9, 6, rng);
  const QMatrix d = random_with_rank(7, 5, 3, rng);
  const QMatrix ref_a = testing::pinv_oracle(a);
  const QMatrix ref_d = testing::pinv_oracle(d);
  for (PinvAlgorithm alg : {PinvAlgorithm::svd_direct, PinvAlgorithm::svd_crep,
                            PinvAlgorithm::frd_direct, PinvAlgorithm::frd_crep}) {
    INFO(std::string(to_string(alg)));
    CHECK(rel_diff(pinv(a, alg), ref_a) <= 1e-10);
    CHECK(rel_diff(pinv(d, alg), ref_d) <= 1e-9);
    CHECK(parse_pinv_algorithm(to_string(alg)) == alg);
  }
  CHECK_THROWS_AS(parse_pinv_algorithm("svd"), ParameterError);
  CHECK(parse_pinv_algorithm("frd_crep") == PinvAlgorithm::frd_crep);
}

TEST_CASE("direct and complex routes agree") {
  Rng rng(13);
  for (int t = 0; t < 5; ++t) {
    const QMatrix a = random_uniform(8, 6, rng);
    const QMatrix s = random_uniform(6, 3, rng);
    const QMatrix tt = random_uniform(3, 8, rng);
    CHECK(rel_diff(outer_right(a, s, tt, with_route(Route::direct)).x,
                   outer_right(a, s, tt, with_route(Route::crep)).x) <= 1e-10);
    const QMatrix w = s * tt;
    CHECK(rel_diff(outer_w_right(a, w, with_route(Route::direct)).x,
                   outer_w_right(a, w, with_route(Route::crep)).x) <= 1e-10);
    // Same spaces through the Urquhart and full-rank routes.
    CHECK(rel_diff(outer_w_right(a, w).x, outer_right(a, s, tt).x) <= 1e-10);
  }
}

TEST_CASE("subspace rank tests") {
  Rng rng(14);
  const QMatrix s = random_uniform(4, 2, rng);
  CHECK(right_range_equal(s, s));
  const QMatrix u = testing::random_invertible(2, rng);
  CHECK(right_range_equal(s * u, s));
  QMatrix e3(4, 1);
  e3.set(2, 0, units::one);
  const QMatrix x = hstack(s, e3) * random_uniform(3, 3, rng);
  CHECK(testing::rank_oracle(x) == 3);
  CHECK_FALSE(right_range_equal(x, s));

  const QMatrix t = random_uniform(2, 5, rng);
  CHECK(right_null_equal(u * t, t));
  CHECK_FALSE(right_null_equal(random_uniform(3, 5, rng), t));
  CHECK(left_range_equal(u * t, t));
  CHECK(left_null_equal(s * u, s));
}
