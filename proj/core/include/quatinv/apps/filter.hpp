#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "quatinv/apps/lorenz.hpp"
#include "quatinv/geninv.hpp"

namespace quatinv::apps {

struct FilterOptions {
  std::size_t delay_samples = 0;
  double noise_sigma = 0.01;
  /// Filter order n; defaults to the largest order the trajectory supports.
  std::optional<std::size_t> order;
  std::uint64_t seed = 0;
  /// Unset: C^+ = V Sigma^+ U^* from one SVD of C on `route`. Set: the
  /// outer-inverse realization of C^+, which squares or cubes cond(C).
  std::optional<PinvAlgorithm> algorithm;
  Route route = Route::crep;
  double rank_rtol = 0.0;
};

/// C f = d with C_{a,b} = c(t + a - b), d_a = d(t + a), t = delay + n and
/// c(tau) = d(tau - delay) + noise (purely imaginary Gaussian).
struct FilterSystem {
  QMatrix c;     ///< (n+1) x (n+1)
  QMatrix d;     ///< (n+1) x 1
  QMatrix f;     ///< C^+ d
  QMatrix dhat;  ///< C f
  double e = 0.0;
  std::size_t order = 0;
  std::size_t t0 = 0;  ///< sample index of the first row
  std::size_t delay = 0;
};

/// floor((N - 1 - delay) / 2); ParameterError when N <= delay.
std::size_t max_filter_order(std::size_t samples, std::size_t delay);

/// ParameterError when the trajectory is too short for the requested order.
FilterSystem build_filter_system(const Trajectory& traj, const FilterOptions& opt);

}  // namespace quatinv::apps
