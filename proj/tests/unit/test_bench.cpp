#include <sstream>
#include <string>

#include "doctest.h"
#include "quatinv/bench.hpp"
#include "quatinv/errors.hpp"

using namespace quatinv;

namespace {

std::size_t line_count(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("bench case shape") {
  const BenchCase c = BenchCase::make(5, 2, 9);
  CHECK(c.m == 15);
  CHECK(c.n == 10);
  CHECK(c.p == 5);
  CHECK(c.q == 5);
}

TEST_CASE("smoke run covers every operation and route") {
  for (BenchSuite suite : {BenchSuite::outer_right, BenchSuite::outer_w_left, BenchSuite::pinv_all4}) {
    INFO(std::string(to_string(suite)));
    const auto recs = run_bench(suite, {5}, 2, 1);
    CHECK(recs.size() == (suite == BenchSuite::pinv_all4 ? 4u : 2u));
    for (const BenchRecord& r : recs) {
      CHECK(r.k == 5);
      CHECK(r.trials == 2);
      CHECK(r.mean_seconds >= 0.0);
      REQUIRE(r.res_outer);
      CHECK(*r.res_outer <= 1e-8);
      if (r.res_one) CHECK(*r.res_one <= 1e-8);
      if (r.res_p3) CHECK(*r.res_p3 <= 1e-8);
      if (r.res_p4) CHECK(*r.res_p4 <= 1e-8);
      CHECK(r.route_diff <= 1e-10);
    }
  }
  CHECK(parse_bench_suite("pinv-all4") == BenchSuite::pinv_all4);
  CHECK_THROWS_AS(parse_bench_suite("everything"), ParameterError);
}

TEST_CASE("CSV output") {
  std::ostringstream empty;
  emit_csv(empty, {});
  CHECK(empty.str() == std::string(kBenchCsvHeader) + "\n");

  BenchRecord r;
  r.op = "outer_right";
  r.route = "crep";
  r.k = 5;
  r.trials = 3;
  r.mean_seconds = 0.25;
  r.res_outer = 1e-15;
  std::ostringstream one;
  emit_csv(one, {r});
  CHECK(line_count(one.str()) == 2);
  CHECK(one.str().find("outer_right,crep,5,3,0.25,1.0000000000000001e-15,,,") != std::string::npos);

  std::ostringstream dat;
  emit_dat(dat, {r});
  CHECK(dat.str().find("NaN") != std::string::npos);

  const auto recs = run_bench(BenchSuite::outer_right, {1, 2, 3}, 1, 2);
  std::ostringstream sweep;
  emit_csv(sweep, recs);
  CHECK(line_count(sweep.str()) == 1 + 2 * 3);
}

TEST_CASE("identical seeds give identical residuals") {
  const auto a = run_bench(BenchSuite::pinv_all4, {2}, 2, 7);
  const auto b = run_bench(BenchSuite::pinv_all4, {2}, 2, 7);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].res_one == b[i].res_one);
    CHECK(a[i].route_diff == b[i].route_diff);
  }
}
