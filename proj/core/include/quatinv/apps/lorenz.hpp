#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace quatinv::apps {

using State3 = std::array<double, 3>;
using Trajectory = std::vector<State3>;

struct LorenzRun {
  double alpha = 10.0;
  double beta = 8.0 / 3.0;
  double rho = 28.0;
  double dt = 0.05;
  double horizon = 10.0;  ///< T
  State3 initial{1.0, 1.0, 1.0};
  double noise_sigma = 0.01;

  /// N = floor(T / dt) + 1 samples at t_i = i dt.
  std::size_t samples() const;
  /// One time unit of delay, round(1 / dt) samples.
  std::size_t delay_samples() const;
};

State3 lorenz_rhs(const LorenzRun& run, const State3& s);
State3 rk4_step(const LorenzRun& run, const State3& s, double dt);

/// Fixed-step RK4 from run.initial; ParameterError unless dt > 0 and T > 0.
Trajectory lorenz_simulate(const LorenzRun& run);

}  // namespace quatinv::apps
