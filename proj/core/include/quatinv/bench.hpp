#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace quatinv {

enum class BenchSuite { outer_right, outer_w_left, pinv_all4 };

std::string_view to_string(BenchSuite s);
/// Accepts outer_right, outer_w_left, pinv_all4 (dashes allowed).
BenchSuite parse_bench_suite(std::string_view s);

/// Problem shape for size parameter k: A is m x n = 3k x 2k, generators use p = q = k.
struct BenchCase {
  std::size_t k = 1;
  std::size_t m = 3;
  std::size_t n = 2;
  std::size_t p = 1;
  std::size_t q = 1;
  std::size_t trials = 1;
  std::uint64_t seed = 0;

  static BenchCase make(std::size_t k, std::size_t trials, std::uint64_t seed);
};

struct BenchRecord {
  std::string op;
  std::string route;
  std::size_t k = 0;
  std::size_t trials = 0;
  double mean_seconds = 0.0;
  /// Max over trials; empty when the residual does not apply to the operation.
  std::optional<double> res_outer;
  std::optional<double> res_one;
  std::optional<double> res_p3;
  std::optional<double> res_p4;
  /// Max over trials of ||X_route - X_other||_F / ||X_other||_F against the
  /// partner realization evaluated on the same inputs.
  double route_diff = 0.0;
};

/// Runs every (operation, route) pair of the suite for each k. Both routes see
/// identical random inputs per trial; only the constructor call is timed.
std::vector<BenchRecord> run_bench(BenchSuite suite, const std::vector<std::size_t>& k_list,
                                   std::size_t trials, std::uint64_t seed);

inline constexpr std::string_view kBenchCsvHeader =
    "op,route,k,trials,mean_seconds,res_outer,res_one,res_p3,res_p4";

void emit_csv(std::ostream& out, const std::vector<BenchRecord>& records);
void emit_csv(const std::filesystem::path& path, const std::vector<BenchRecord>& records);
/// Whitespace-separated mirror for gnuplot; missing values are written as NaN.
void emit_dat(std::ostream& out, const std::vector<BenchRecord>& records);
void emit_dat(const std::filesystem::path& path, const std::vector<BenchRecord>& records);

}  // namespace quatinv
