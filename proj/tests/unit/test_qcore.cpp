#include <sstream>

#include "doctest.h"
#include "quatinv/crep.hpp"
#include "quatinv/errors.hpp"
#include "quatinv/qmat_io.hpp"
#include "quatinv/qmatrix.hpp"
#include "quatinv/quaternion.hpp"
#include "quatinv/random.hpp"
#include "support/oracles.hpp"

using namespace quatinv;
using quatinv::testing::crep_of;

namespace {

double qdiff(const Quaternion& a, const Quaternion& b) { return (a - b).abs(); }

Quaternion random_unit(Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Quaternion q{n(rng), n(rng), n(rng), n(rng)};
  return q * (1.0 / q.abs());
}

}  // namespace

TEST_CASE("quaternion product follows the Hamilton relations") {
  CHECK(units::i * units::j == units::k);
  CHECK(units::j * units::i == Quaternion{0, 0, 0, -1});
  CHECK(units::i * units::i == Quaternion{-1});
  CHECK(units::j * units::k == units::i);
  CHECK(units::k * units::i == units::j);

  const Quaternion q{0.3, -1.2, 2.5, 0.7};
  CHECK(units::one * q == q);
  CHECK(q * units::one == q);

  CHECK(Quaternion{1, 1, 0, 0} * Quaternion{1, 0, 1, 0} == Quaternion{1, 1, 1, 1});
}

TEST_CASE("quaternion product is associative on unit quaternions") {
  Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    const Quaternion p = random_unit(rng);
    const Quaternion q = random_unit(rng);
    const Quaternion r = random_unit(rng);
    CHECK(qdiff((p * q) * r, p * (q * r)) <= 1e-14);
  }
}

TEST_CASE("quaternion inverse and conjugate") {
  const Quaternion q{1.5, -2.0, 0.25, 3.0};
  CHECK(qdiff(q * inverse(q), units::one) <= 1e-15);
  CHECK(qdiff(inverse(q) * q, units::one) <= 1e-15);
  CHECK(conj(units::j) == Quaternion{0, 0, -1, 0});
  CHECK(Quaternion{1, 1, 1, 1}.abs() == doctest::Approx(2.0));
}

TEST_CASE("matrix product") {
  Rng rng(3);
  const QMatrix b = random_uniform(3, 4, rng);
  CHECK(QMatrix::identity(3) * b == b);

  const QMatrix a = random_uniform(3, 3, rng);
  const QMatrix c = random_uniform(3, 3, rng);
  const QMatrix via_crep = testing::from_dense(crep_of(a) * crep_of(c));
  CHECK(rel_diff(a * c, via_crep) <= 1e-14);

  // Entrywise Hamilton products as an independent check.
  QMatrix manual(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      Quaternion acc;
      for (std::size_t k = 0; k < 3; ++k) acc += a(i, k) * c(k, j);
      manual.set(i, j, acc);
    }
  CHECK(rel_diff(a * c, manual) <= 1e-14);

  const QMatrix p = random_uniform(2, 3, rng);
  const QMatrix q = random_uniform(3, 2, rng);
  CHECK(rel_diff((p * q).conj_transpose(), q.conj_transpose() * p.conj_transpose()) <= 1e-14);
}

TEST_CASE("conjugate transpose") {
  Rng rng(5);
  const QMatrix a = random_signed(4, 3, rng);
  CHECK(a.conj_transpose().conj_transpose() == a);
  const QMatrix jm = QMatrix::from_quaternions(1, 1, {units::j});
  CHECK(jm.conj_transpose()(0, 0) == Quaternion{0, 0, -1, 0});
}

TEST_CASE("Frobenius norm") {
  CHECK(QMatrix::from_quaternions(1, 1, {Quaternion{1, 1, 1, 1}}).fro_norm() == doctest::Approx(2.0));
  CHECK(QMatrix(3, 2).fro_norm() == 0.0);
  Rng rng(9);
  const QMatrix a = random_signed(5, 3, rng);
  CHECK(std::abs(a.fro_norm() - crep_of(a).norm() / std::sqrt(2.0)) <= 1e-14 * a.fro_norm());
}

TEST_CASE("complex representation of j and round trip") {
  const CMatrix c = to_crep(QMatrix::from_quaternions(1, 1, {units::j})).data();
  CHECK(c(0, 0) == Complex(0, 0));
  CHECK(c(0, 1) == Complex(1, 0));
  CHECK(c(1, 0) == Complex(-1, 0));
  CHECK(c(1, 1) == Complex(0, 0));

  Rng rng(4);
  const QMatrix a = random_signed(3, 4, rng);
  CHECK(from_crep(to_crep(a)) == a);
  CHECK(from_crep_row(to_crep_row(a).data(), 4) == a);

  CMatrix bad(2, 2);
  bad << Complex(0.3, 0.1), Complex(0.7, -0.2), Complex(0.5, 0.4), Complex(-0.9, 0.6);
  CHECK_THROWS_AS(from_crep(bad), StructureError);
  CHECK_THROWS_AS(from_crep(CMatrix(3, 2)), DimensionError);
}

TEST_CASE("symmetrize_crep") {
  Rng rng(8);
  const QMatrix a = random_signed(3, 2, rng);
  const CMatrix c = to_crep(a).data();
  CHECK((symmetrize_crep(c, 3, 2).data() - c).norm() <= 1e-15 * c.norm());

  CHECK(symmetrize_crep(CMatrix::Identity(2, 2), 1, 1).data() == CMatrix::Identity(2, 2));

  // A non-symplectic left inverse of A^C stays a left inverse after projection.
  const testing::DenseC ac = crep_of(random_signed(4, 2, rng));
  const testing::DenseC pinv = ac.completeOrthogonalDecomposition().pseudoInverse();
  const testing::DenseC z = testing::DenseC::Random(4, 8);
  const testing::DenseC c0 = pinv + z * (testing::DenseC::Identity(8, 8) - ac * pinv);
  REQUIRE((c0 * ac - testing::DenseC::Identity(4, 4)).norm() <= 1e-12);
  REQUIRE(symplectic_defect(CMatrix(c0)) > 1e-3);
  const CRep sym = symmetrize_crep(CMatrix(c0), 2, 4);
  CHECK((sym.data() * ac - testing::DenseC::Identity(4, 4)).norm() <= 1e-12);
  CHECK(symplectic_defect(sym.data()) <= 1e-14);
}

TEST_CASE("complex representation is a structure-preserving homomorphism") {
  Rng rng(21);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  std::uniform_real_distribution<double> scal(-2.0, 2.0);
  for (int t = 0; t < 100; ++t) {
    const std::size_t m = dim(rng), n = dim(rng), p = dim(rng);
    const QMatrix a = random_signed(m, n, rng);
    const QMatrix b = random_signed(m, n, rng);
    const QMatrix r = random_signed(n, p, rng);
    const double alpha = scal(rng);
    const auto rel = [](const testing::DenseC& x, const testing::DenseC& y) {
      return (x - y).norm() / std::max(1.0, y.norm());
    };
    CHECK(rel(crep_of(a * alpha), alpha * crep_of(a)) <= 1e-13);
    CHECK(rel(crep_of(a + b), crep_of(a) + crep_of(b)) <= 1e-13);
    CHECK(rel(crep_of(a * r), crep_of(a) * crep_of(r)) <= 1e-13);
    CHECK(rel(crep_of(a.conj_transpose()), crep_of(a).adjoint()) <= 1e-13);
    CHECK(symplectic_defect(to_crep(a).data()) <= 1e-15);
    CHECK(std::abs(a.fro_norm2() - 0.5 * crep_of(a).squaredNorm()) <= 1e-13 * a.fro_norm2());
  }
}

TEST_CASE(".qmat round trip is bitwise") {
  Rng rng(17);
  const QMatrix a = random_signed(4, 3, rng) * 1e-7 + random_uniform(4, 3, rng) * 1e5;
  std::stringstream ss;
  write_qmat(ss, a);
  CHECK(read_qmat(ss) == a);

  std::stringstream with_comments("# comment\n# another\nQMAT 1 2\n1 2 3 4\n-0.5 0 0 1e-3\n");
  const QMatrix b = read_qmat(with_comments);
  CHECK(b(0, 0) == Quaternion{1, 2, 3, 4});
  CHECK(b(0, 1) == Quaternion{-0.5, 0, 0, 1e-3});

  std::stringstream bad_header("QMTX 1 1\n0 0 0 0\n");
  CHECK_THROWS_AS(read_qmat(bad_header), FormatError);
  std::stringstream truncated("QMAT 2 1\n0 0 0 0\n");
  CHECK_THROWS_AS(read_qmat(truncated), FormatError);
  std::stringstream garbage("QMAT 1 1\n0 0 x 0\n");
  CHECK_THROWS_AS(read_qmat(garbage), FormatError);
}
