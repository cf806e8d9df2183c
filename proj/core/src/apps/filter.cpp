#include "quatinv/apps/filter.hpp"

#include <random>

#include "quatinv/errors.hpp"
#include "quatinv/one_inverse.hpp"

namespace quatinv::apps {

std::size_t max_filter_order(std::size_t samples, std::size_t delay) {
  if (samples <= delay) {
    throw ParameterError("filter: trajectory of " + std::to_string(samples) +
                         " samples is shorter than the delay of " + std::to_string(delay));
  }
  return (samples - 1 - delay) / 2;
}

FilterSystem build_filter_system(const Trajectory& traj, const FilterOptions& opt) {
  if (!(opt.noise_sigma >= 0.0)) throw ParameterError("filter: noise sigma must be >= 0");
  const std::size_t samples = traj.size();
  const std::size_t delay = opt.delay_samples;
  const std::size_t nmax = max_filter_order(samples, delay);
  const std::size_t n = opt.order.value_or(nmax);
  if (n > nmax) {
    throw ParameterError("filter: order " + std::to_string(n) + " needs " +
                         std::to_string(delay + 2 * n + 1) + " samples, trajectory has " +
                         std::to_string(samples));
  }

  // c(tau) = d(tau - delay) + n(tau), defined for tau >= delay.
  std::mt19937_64 rng(opt.seed);
  std::normal_distribution<double> noise(0.0, opt.noise_sigma);
  std::vector<Quaternion> c(samples);
  for (std::size_t tau = 0; tau < samples; ++tau) {
    Quaternion e;
    if (opt.noise_sigma > 0.0) {
      e.x = noise(rng);
      e.y = noise(rng);
      e.z = noise(rng);
    }
    if (tau >= delay) {
      const State3& s = traj[tau - delay];
      c[tau] = Quaternion{0.0, s[0], s[1], s[2]} + e;
    }
  }

  FilterSystem sys;
  sys.order = n;
  sys.delay = delay;
  sys.t0 = delay + n;
  const std::size_t dim = n + 1;
  sys.c = QMatrix(dim, dim);
  sys.d = QMatrix(dim, 1);
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t b = 0; b < dim; ++b) sys.c.set(a, b, c[sys.t0 + a - b]);
    const State3& s = traj[sys.t0 + a];
    sys.d.set(a, 0, Quaternion{0.0, s[0], s[1], s[2]});
  }
  const QMatrix cp = opt.algorithm ? pinv(sys.c, *opt.algorithm, opt.rank_rtol)
                                   : one_inverse(sys.c, FreeBlocks{}, opt.route, opt.rank_rtol);
  sys.f = cp * sys.d;
  sys.dhat = sys.c * sys.f;
  const double dn = sys.d.fro_norm();
  sys.e = dn > 0.0 ? (sys.dhat - sys.d).fro_norm() / dn : (sys.dhat - sys.d).fro_norm();
  return sys;
}

}  // namespace quatinv::apps
