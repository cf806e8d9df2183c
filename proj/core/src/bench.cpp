#include "quatinv/bench.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <ostream>

#include "quatinv/errors.hpp"
#include "quatinv/geninv.hpp"
#include "quatinv/random.hpp"

namespace quatinv {

namespace {

struct Inputs {
  QMatrix a, s, t;
};

Inputs make_inputs(BenchSuite suite, const BenchCase& bc, std::size_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(bc.seed), static_cast<std::uint32_t>(bc.seed >> 32),
                    static_cast<std::uint32_t>(bc.k), static_cast<std::uint32_t>(trial)};
  Rng rng(seq);
  Inputs in;
  in.a = random_uniform(bc.m, bc.n, rng);
  if (suite == BenchSuite::outer_right) {
    in.s = random_uniform(bc.n, bc.p, rng);
    in.t = random_uniform(bc.q, bc.m, rng);
  } else if (suite == BenchSuite::outer_w_left) {
    in.s = random_uniform(bc.n, bc.k, rng) * random_uniform(bc.k, bc.m, rng);
  }
  return in;
}

struct Acc {
  BenchRecord rec;
  double seconds = 0.0;
};

void track(std::optional<double>& slot, double v) { slot = std::max(slot.value_or(0.0), v); }

double rel(const QMatrix& x, const QMatrix& y) { return rel_diff(x, y); }

template <class F>
QMatrix timed(F&& f, double& seconds, InverseReport& rep) {
  const auto t0 = std::chrono::steady_clock::now();
  rep = f();
  const auto t1 = std::chrono::steady_clock::now();
  seconds += std::chrono::duration<double>(t1 - t0).count();
  return rep.x;
}

std::string fmt(const char* spec, double v) {
  std::array<char, 64> buf{};
  std::snprintf(buf.data(), buf.size(), spec, v);
  return buf.data();
}

}  // namespace

std::string_view to_string(BenchSuite s) {
  switch (s) {
    case BenchSuite::outer_right: return "outer_right";
    case BenchSuite::outer_w_left: return "outer_w_left";
    case BenchSuite::pinv_all4: return "pinv_all4";
  }
  return "unknown";
}

BenchSuite parse_bench_suite(std::string_view s) {
  std::string t(s);
  std::replace(t.begin(), t.end(), '-', '_');
  for (BenchSuite b : {BenchSuite::outer_right, BenchSuite::outer_w_left, BenchSuite::pinv_all4})
    if (t == to_string(b)) return b;
  throw ParameterError("unknown bench suite '" + std::string(s) +
                       "' (expected outer_right, outer_w_left or pinv_all4)");
}

BenchCase BenchCase::make(std::size_t k, std::size_t trials, std::uint64_t seed) {
  if (k == 0) throw ParameterError("bench: k must be >= 1");
  if (trials == 0) throw ParameterError("bench: trials must be >= 1");
  return {k, 3 * k, 2 * k, k, k, trials, seed};
}

std::vector<BenchRecord> run_bench(BenchSuite suite, const std::vector<std::size_t>& k_list,
                                   std::size_t trials, std::uint64_t seed) {
  std::vector<BenchRecord> out;
  for (std::size_t k : k_list) {
    const BenchCase bc = BenchCase::make(k, trials, seed);
    std::vector<Acc> acc;
    auto add = [&](std::string op, std::string route) {
      Acc a;
      a.rec.op = std::move(op);
      a.rec.route = std::move(route);
      a.rec.k = k;
      a.rec.trials = trials;
      acc.push_back(std::move(a));
    };
    if (suite == BenchSuite::pinv_all4) {
      for (PinvAlgorithm alg : {PinvAlgorithm::svd_direct, PinvAlgorithm::svd_crep,
                                PinvAlgorithm::frd_direct, PinvAlgorithm::frd_crep})
        add("pinv", std::string(to_string(alg)));
    } else {
      add(std::string(to_string(suite)), "direct");
      add(std::string(to_string(suite)), "crep");
    }

    for (std::size_t trial = 0; trial < trials; ++trial) {
      const Inputs in = make_inputs(suite, bc, trial);
      std::vector<QMatrix> xs(acc.size());
      for (std::size_t i = 0; i < acc.size(); ++i) {
        InverseReport rep;
        BenchRecord& r = acc[i].rec;
        if (suite == BenchSuite::pinv_all4) {
          const PinvAlgorithm alg = parse_pinv_algorithm(r.route);
          xs[i] = timed([&] { return pinv_report(in.a, alg, 0.0, false); }, acc[i].seconds, rep);
          rep.residuals = penrose_residuals(in.a, rep.x);
          track(r.res_outer, rep.residuals.at("outer"));
          track(r.res_one, rep.residuals.at("one"));
          track(r.res_p3, rep.residuals.at("p3"));
          track(r.res_p4, rep.residuals.at("p4"));
        } else {
          GenInvOptions opt;
          opt.route = parse_route(r.route);
          opt.verify = false;
          if (suite == BenchSuite::outer_right) {
            xs[i] = timed([&] { return outer_right(in.a, in.s, in.t, opt); }, acc[i].seconds, rep);
          } else {
            xs[i] = timed([&] { return outer_w_left(in.a, in.s, opt); }, acc[i].seconds, rep);
          }
          rep.residuals = penrose_residuals(in.a, rep.x);
          track(r.res_outer, rep.residuals.at("outer"));
        }
      }
      // Routes are paired (direct, crep) in record order.
      for (std::size_t i = 0; i + 1 < acc.size(); i += 2) {
        const double d = rel(xs[i], xs[i + 1]);
        acc[i].rec.route_diff = std::max(acc[i].rec.route_diff, d);
        acc[i + 1].rec.route_diff = std::max(acc[i + 1].rec.route_diff, d);
      }
    }
    for (Acc& a : acc) {
      a.rec.mean_seconds = a.seconds / static_cast<double>(trials);
      out.push_back(std::move(a.rec));
    }
  }
  return out;
}

void emit_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
  out << kBenchCsvHeader << '\n';
  auto opt = [](const std::optional<double>& v) { return v ? fmt("%.17g", *v) : std::string(); };
  for (const BenchRecord& r : records) {
    out << r.op << ',' << r.route << ',' << r.k << ',' << r.trials << ','
        << fmt("%.9g", r.mean_seconds) << ',' << opt(r.res_outer) << ',' << opt(r.res_one) << ','
        << opt(r.res_p3) << ',' << opt(r.res_p4) << '\n';
  }
  if (!out) throw FormatError("bench: CSV write failed");
}

void emit_csv(const std::filesystem::path& path, const std::vector<BenchRecord>& records) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot open " + path.string() + " for writing");
  emit_csv(out, records);
}

void emit_dat(std::ostream& out, const std::vector<BenchRecord>& records) {
  out << "# op route k trials mean_seconds res_outer res_one res_p3 res_p4\n";
  auto opt = [](const std::optional<double>& v) { return v ? fmt("%.17g", *v) : "NaN"; };
  for (const BenchRecord& r : records) {
    out << r.op << ' ' << r.route << ' ' << r.k << ' ' << r.trials << ' '
        << fmt("%.9g", r.mean_seconds) << ' ' << opt(r.res_outer) << ' ' << opt(r.res_one) << ' '
        << opt(r.res_p3) << ' ' << opt(r.res_p4) << '\n';
  }
  if (!out) throw FormatError("bench: .dat write failed");
}

void emit_dat(const std::filesystem::path& path, const std::vector<BenchRecord>& records) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot open " + path.string() + " for writing");
  emit_dat(out, records);
}

}  // namespace quatinv
