#include "quatinv/apps/lorenz.hpp"

#include <cmath>

#include "quatinv/errors.hpp"

namespace quatinv::apps {

std::size_t LorenzRun::samples() const {
  return static_cast<std::size_t>(std::floor(horizon / dt + 1e-9)) + 1;
}

std::size_t LorenzRun::delay_samples() const {
  return static_cast<std::size_t>(std::lround(1.0 / dt));
}

State3 lorenz_rhs(const LorenzRun& run, const State3& s) {
  const double x = s[0];
  const double y = s[1];
  const double z = s[2];
  return {run.alpha * (y - x), x * (run.rho - z) - y, x * y - run.beta * z};
}

State3 rk4_step(const LorenzRun& run, const State3& s, double dt) {
  auto axpy = [](const State3& a, double h, const State3& k) {
    return State3{a[0] + h * k[0], a[1] + h * k[1], a[2] + h * k[2]};
  };
  const State3 k1 = lorenz_rhs(run, s);
  const State3 k2 = lorenz_rhs(run, axpy(s, 0.5 * dt, k1));
  const State3 k3 = lorenz_rhs(run, axpy(s, 0.5 * dt, k2));
  const State3 k4 = lorenz_rhs(run, axpy(s, dt, k3));
  State3 out;
  for (int i = 0; i < 3; ++i) out[i] = s[i] + dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  return out;
}

Trajectory lorenz_simulate(const LorenzRun& run) {
  if (!(run.dt > 0.0) || !std::isfinite(run.dt)) throw ParameterError("lorenz: dt must be > 0");
  if (!(run.horizon > 0.0) || !std::isfinite(run.horizon)) {
    throw ParameterError("lorenz: T must be > 0");
  }
  const std::size_t n = run.samples();
  Trajectory traj;
  traj.reserve(n);
  traj.push_back(run.initial);
  for (std::size_t i = 1; i < n; ++i) traj.push_back(rk4_step(run, traj.back(), run.dt));
  return traj;
}

}  // namespace quatinv::apps
