#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json_report.hpp"
#include "quatinv/apps/blur.hpp"
#include "quatinv/apps/deblur.hpp"
#include "quatinv/apps/filter.hpp"
#include "quatinv/apps/image.hpp"
#include "quatinv/apps/lorenz.hpp"
#include "quatinv/apps/metrics.hpp"
#include "quatinv/bench.hpp"
#include "quatinv/errors.hpp"
#include "quatinv/frd.hpp"
#include "quatinv/geninv.hpp"
#include "quatinv/qmat_io.hpp"
#include "quatinv/rank.hpp"
#include "quatinv/special.hpp"
#include "quatinv/svd.hpp"

namespace quatinv::cli {

namespace {

struct Common {
  std::string route = "crep";
  std::optional<std::uint64_t> seed;
  double tol = 0.0;
  std::string out;
  std::string json;

  Route parsed_route() const { return parse_route(route); }

  // --seed, then QUATINV_SEED, then 0.
  std::uint64_t resolved_seed() const {
    if (seed) return *seed;
    const char* env = std::getenv("QUATINV_SEED");
    if (env == nullptr || *env == '\0') return 0;
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw ParameterError(std::string("QUATINV_SEED is not an unsigned integer: '") + env + "'");
  }

  // Human-readable output moves to stderr when stdout carries the JSON report.
  std::ostream& text(std::ostream& out, std::ostream& err) const {
    return json == "-" ? err : out;
  }
};

void add_common(CLI::App* sub, Common& c, const std::string& out_help) {
  sub->add_option("--route", c.route, "Computational route")
      ->check(CLI::IsMember({"direct", "crep"}))
      ->capture_default_str();
  sub->add_option("--seed", c.seed, "Random seed (falls back to QUATINV_SEED, then 0)");
  sub->add_option("--tol", c.tol, "Relative rank tolerance (0 = max(m,n)*eps)")
      ->check(CLI::NonNegativeNumber);
  sub->add_option("--out", c.out, out_help);
  sub->add_option("--json", c.json, "Write the JSON report to this path ('-' = stdout)");
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw FormatError("cannot open '" + path + "' for writing");
  f << text;
  if (!f) throw FormatError("write failed for '" + path + "'");
}

void emit_json(const Json& j, const std::string& path, std::ostream& out) {
  if (path.empty()) return;
  if (path == "-") {
    out << j.dump(2) << '\n';
  } else {
    write_text(path, j.dump(2) + '\n');
  }
}

// Existence failures always produce the diagnostic JSON, on stdout when no
// path was given.
int fail_existence(const Json& j, const Common& c, std::ostream& out, std::ostream& err,
                   const std::string& message) {
  err << "no inverse: " << message << '\n';
  emit_json(j, c.json.empty() ? "-" : c.json, out);
  return kExitNoInverse;
}

std::string fmt_sci(double v) {
  std::ostringstream s;
  s << std::scientific << std::setprecision(3) << v;
  return s.str();
}

void print_residuals(std::ostream& out, const std::map<std::string, double>& res) {
  for (const auto& [k, v] : res) out << "  " << std::left << std::setw(8) << k << fmt_sci(v) << '\n';
}

std::string shape(const QMatrix& a) { return shape_string(a.rows(), a.cols()); }

Json matrix3_json(const Eigen::Matrix3d& m) {
  Json j = Json::array();
  for (int r = 0; r < 3; ++r) {
    Json row = Json::array();
    for (int c = 0; c < 3; ++c) row.push_back(number(m(r, c)));
    j.push_back(row);
  }
  return j;
}

Json metrics_json(const apps::RestorationMetrics& m) {
  return {{"psnr_db", number(m.psnr)}, {"ssim", number(m.ssim)}, {"rr", number(m.rr)}};
}

Side parse_side(const std::string& s) { return s == "left" ? Side::left : Side::right; }

std::string csv_number(double v) {
  std::ostringstream s;
  s << std::setprecision(17) << v;
  return s.str();
}

// ---------------------------------------------------------------- commands

struct PinvArgs {
  Common c;
  std::string in;
  std::string algorithm;
  bool frd = false;
};

int cmd_pinv(const PinvArgs& a, std::ostream& out, std::ostream& err) {
  std::ostream& txt = a.c.text(out, err);
  const QMatrix m = read_qmat(a.in);
  const PinvAlgorithm alg = a.algorithm.empty() ? pinv_algorithm(a.frd, a.c.parsed_route())
                                                : parse_pinv_algorithm(a.algorithm);
  const InverseReport rep = pinv_report(m, alg, a.c.tol);
  if (!a.c.out.empty()) write_qmat(a.c.out, rep.x);
  Json j;
  j["command"] = "pinv";
  j["algorithm"] = std::string(to_string(alg));
  j["input_shape"] = shape_json(m);
  j["report"] = to_json(rep);
  emit_json(j, a.c.json, out);
  txt << "pinv " << to_string(alg) << ": A " << shape(m) << ", rank " << rep.ranks.nu
      << ", X " << shape(rep.x) << '\n';
  print_residuals(txt, rep.residuals);
  return kExitOk;
}

struct OuterArgs {
  Common c;
  std::string in, s, t;
  std::string side = "right";
  bool random_blocks = false;
};

int cmd_outer(const OuterArgs& a, std::ostream& out, std::ostream& err) {
  std::ostream& txt = a.c.text(out, err);
  const QMatrix m = read_qmat(a.in);
  const QMatrix s = read_qmat(a.s);
  const QMatrix t = read_qmat(a.t);
  GenInvOptions opt;
  opt.route = a.c.parsed_route();
  opt.rank_rtol = a.c.tol;
  opt.free_blocks = FreeBlocks{a.random_blocks, a.c.resolved_seed()};
  InverseReport rep;
  if (a.side == "both") {
    rep = outer_both(m, s, t, opt);
  } else if (a.side == "left") {
    rep = outer_left(m, s, t, opt);
  } else {
    rep = outer_right(m, s, t, opt);
  }
  Json j;
  j["command"] = "outer";
  j["seed"] = opt.free_blocks.seed;
  j["random_blocks"] = a.random_blocks;
  j["report"] = to_json(rep);
  if (!rep.exists) return fail_existence(j, a.c, out, err, rep.message);
  if (!a.c.out.empty()) write_qmat(a.c.out, rep.x);
  emit_json(j, a.c.json, out);
  txt << rep.construction << " (" << to_string(rep.route) << "): X " << shape(rep.x)
      << ", ranks A/S/T/core = " << rep.ranks.nu << '/' << rep.ranks.s << '/' << rep.ranks.t
      << '/' << rep.ranks.tas << '\n';
  txt << "  one-inverse " << rep.flags.is_one_inverse << ", outer " << rep.flags.is_outer
      << ", unique " << rep.flags.unique_outer << ", {1,2} " << rep.flags.is_12_unique << '\n';
  print_residuals(txt, rep.residuals);
  return kExitOk;
}

struct OuterWArgs {
  Common c;
  std::string in, w;
  std::string side = "right";
};

int cmd_outer_w(const OuterWArgs& a, std::ostream& out, std::ostream& err) {
  std::ostream& txt = a.c.text(out, err);
  const QMatrix m = read_qmat(a.in);
  const QMatrix w = read_qmat(a.w);
  GenInvOptions opt;
  opt.route = a.c.parsed_route();
  opt.rank_rtol = a.c.tol;
  const InverseReport rep =
      parse_side(a.side) == Side::left ? outer_w_left(m, w, opt) : outer_w_right(m, w, opt);
  Json j;
  j["command"] = "outer-w";
  j["report"] = to_json(rep);
  if (!rep.exists) return fail_existence(j, a.c, out, err, rep.message);
  if (!a.c.out.empty()) write_qmat(a.c.out, rep.x);
  emit_json(j, a.c.json, out);
  txt << rep.construction << " (" << to_string(rep.route) << "): X " << shape(rep.x)
      << ", rank W = " << rep.ranks.s << '\n';
  print_residuals(txt, rep.residuals);
  return kExitOk;
}

struct SpecialArgs {
  Common c;
  std::string in;
};

int cmd_special(const SpecialArgs& a, bool group, std::ostream& out, std::ostream& err) {
  std::ostream& txt = a.c.text(out, err);
  const QMatrix m = read_qmat(a.in);
  const Route route = a.c.parsed_route();
  const DrazinResult d = group ? group_inverse(m, route, a.c.tol) : drazin(m, route, a.c.tol);
  Json j;
  j["command"] = group ? "group" : "drazin";
  j["route"] = std::string(to_string(route));
  j["result"] = to_json(d);
  if (!d.exists) return fail_existence(j, a.c, out, err, d.message);
  if (!a.c.out.empty()) write_qmat(a.c.out, d.x);
  emit_json(j, a.c.json, out);
  txt << (group ? "group" : "drazin") << " inverse (" << to_string(route) << "): Ind(A) = "
      << d.index << '\n';
  print_residuals(txt, d.residuals);
  return kExitOk;
}

int cmd_rank(const SpecialArgs& a, std::ostream& out, std::ostream& err) {
  std::ostream& txt = a.c.text(out, err);
  const QMatrix m = read_qmat(a.in);
  const RVector sv = singular_values(m);
  const std::size_t r = rank(m, a.c.tol);
  Json j;
  j["command"] = "rank";
  j["shape"] = shape_json(m);
  j["rank"] = r;
  j["threshold"] = sv.size() > 0 ? number(rank_threshold(sv(0), m.rows(), m.cols(), a.c.tol)) : Json(0.0);
  j["singular_values"] = to_json(sv);
  emit_json(j, a.c.json, out);
  txt << "rank " << r << " (" << shape(m) << ")\n";
  return kExitOk;
}

struct SvdArgs {
  Common c;
  std::string in;
  std::string out_v;
};

int cmd_svd(const SvdArgs& a, std::ostream& out, std::ostream& err) {
  std::ostream& txt = a.c.text(out, err);
  const QMatrix m = read_qmat(a.in);
  const Route route = a.c.parsed_route();
  const QSvdResult s = qsvd(m, route, a.c.tol);
  if (!a.c.out.empty()) write_qmat(a.c.out, s.u);
  if (!a.out_v.empty()) write_qmat(a.out_v, s.v);
  const double an = m.fro_norm();
  Json j;
  j["command"] = "svd";
  j["route"] = std::string(to_string(route));
  j["shape"] = shape_json(m);
  j["rank"] = s.rank;
  j["singular_values"] = to_json(s.sigma);
  j["reconstruction_error"] = number((s.reconstruct() - m).fro_norm() / (an > 0.0 ? an : 1.0));
  j["u_orthogonality"] =
      number((s.u.conj_transpose() * s.u - QMatrix::identity(s.u.cols())).fro_norm());
  j["v_orthogonality"] =
      number((s.v.conj_transpose() * s.v - QMatrix::identity(s.v.cols())).fro_norm());
  emit_json(j, a.c.json, out);
  txt << "svd (" << to_string(route) << "): " << shape(m) << ", rank " << s.rank << '\n';
  for (Eigen::Index i = 0; i < s.sigma.size(); ++i) txt << "  " << csv_number(s.sigma(i)) << '\n';
  return kExitOk;
}

struct FrdArgs {
  Common c;
  std::string in;
  std::string side = "column";
  std::string out_g;
};

int cmd_frd(const FrdArgs& a, std::ostream& out, std::ostream& err) {
  std::ostream& txt = a.c.text(out, err);
  const QMatrix m = read_qmat(a.in);
  const Route route = a.c.parsed_route();
  const FrdSide side = a.side == "row" ? FrdSide::row : FrdSide::column;
  const FullRankFactorization f = full_rank_decompose(m, side, route, a.c.tol);
  if (!a.c.out.empty()) write_qmat(a.c.out, f.f());
  if (!a.out_g.empty()) write_qmat(a.out_g, f.g());
  const double an = m.fro_norm();
  Json j;
  j["command"] = "frd";
  j["route"] = std::string(to_string(route));
  j["side"] = a.side;
  j["shape"] = shape_json(m);
  j["rank"] = f.rank;
  j["pivots"] = f.pivots;
  j["f_shape"] = shape_json(f.f());
  j["g_shape"] = shape_json(f.g());
  j["reconstruction_error"] =
      number(f.rank == 0 ? an : (f.product() - m).fro_norm() / (an > 0.0 ? an : 1.0));
  emit_json(j, a.c.json, out);
  txt << "frd " << a.side << " (" << to_string(route) << "): rank " << f.rank << ", F "
      << shape(f.f()) << ", G " << shape(f.g()) << '\n';
  return kExitOk;
}

struct DeblurArgs {
  Common c;
  std::string image;
  std::size_t width = 64;
  apps::BlurParams blur;
  bool compare_real = false;
  std::string algorithm = "svd-crep";
  std::string out_blurred;
  std::string out_real;
};

int cmd_deblur(const DeblurArgs& a, std::ostream& out, std::ostream& err) {
  std::ostream& txt = a.c.text(out, err);
  const std::uint64_t seed = a.c.resolved_seed();
  const PinvAlgorithm alg = parse_pinv_algorithm(a.algorithm);
  const apps::BlurOperator op = apps::build_blur(a.blur);
  const apps::ColorImage x = a.image.empty()
                                 ? apps::synthetic_image(op.size(), a.width, seed)
                                 : apps::read_ppm(std::filesystem::path(a.image));
  const QMatrix b = apps::blur(op, x);
  if (!a.out_blurred.empty()) apps::write_ppm(std::filesystem::path(a.out_blurred), apps::from_quaternion(b));

  const auto t0 = std::chrono::steady_clock::now();
  const apps::QuaternionRestoration q = apps::deblur_quaternion(op.a, b, {alg, a.c.tol});
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const apps::RestorationMetrics mq = apps::compute_metrics(x, q.restored);
  if (!a.c.out.empty()) apps::write_ppm(std::filesystem::path(a.c.out), q.restored);

  Json j;
  j["command"] = "deblur";
  j["psnr_db"] = number(mq.psnr);
  j["ssim"] = number(mq.ssim);
  j["rr"] = number(mq.rr);
  j["corr_orig"] = matrix3_json(mq.corr_orig);
  j["corr_quat"] = matrix3_json(mq.corr_restored);
  j["corr_real"] = nullptr;
  j["corr_deviation_quat"] = number(apps::correlation_deviation(mq.corr_orig, mq.corr_restored));
  j["params"] = {{"p", a.blur.p},           {"q", a.blur.q},
                 {"sigma", a.blur.sigma},   {"r", a.blur.r},
                 {"s", a.blur.s},           {"algorithm", std::string(to_string(alg))},
                 {"height", x.height},      {"width", x.width},
                 {"image", a.image.empty() ? Json("synthetic") : Json(a.image)}};
  j["seed"] = seed;

  txt << "deblur " << x.height << "x" << x.width << " (p=" << a.blur.p << ", q=" << a.blur.q
      << ", " << to_string(alg) << ")\n";
  txt << "  quaternion: PSNR " << std::fixed << std::setprecision(2) << mq.psnr << " dB, SSIM "
      << std::setprecision(4) << mq.ssim << ", RR " << fmt_sci(mq.rr) << '\n';
  if (a.compare_real) {
    const apps::ColorImage real = apps::real_block_restore(op, b, a.c.tol);
    const apps::RestorationMetrics mr = apps::compute_metrics(x, real);
    if (!a.out_real.empty()) apps::write_ppm(std::filesystem::path(a.out_real), real);
    j["corr_real"] = matrix3_json(mr.corr_restored);
    j["corr_deviation_real"] = number(apps::correlation_deviation(mr.corr_orig, mr.corr_restored));
    j["real"] = metrics_json(mr);
    txt << "  real block: PSNR " << std::fixed << std::setprecision(2) << mr.psnr << " dB, SSIM "
        << std::setprecision(4) << mr.ssim << ", RR " << fmt_sci(mr.rr) << '\n';
  }
  j["seconds"] = seconds;
  emit_json(j, a.c.json, out);
  return kExitOk;
}

struct LorenzArgs {
  Common c;
  apps::LorenzRun run;
  std::optional<std::size_t> order;
  std::optional<std::size_t> delay;
  std::string algorithm = "svd";
  std::string trajectory;
};

int cmd_lorenz(const LorenzArgs& a, std::ostream& out, std::ostream& err) {
  std::ostream& txt = a.c.text(out, err);
  const std::uint64_t seed = a.c.resolved_seed();
  const apps::Trajectory traj = apps::lorenz_simulate(a.run);
  apps::FilterOptions fo;
  fo.delay_samples = a.delay.value_or(a.run.delay_samples());
  fo.noise_sigma = a.run.noise_sigma;
  fo.order = a.order;
  fo.seed = seed;
  fo.route = a.c.parsed_route();
  fo.rank_rtol = a.c.tol;
  if (a.algorithm != "svd") fo.algorithm = parse_pinv_algorithm(a.algorithm);
  const apps::FilterSystem sys = apps::build_filter_system(traj, fo);

  if (!a.trajectory.empty()) {
    std::ostringstream s;
    s << "t,x,y,z\n";
    for (std::size_t i = 0; i < traj.size(); ++i) {
      s << csv_number(static_cast<double>(i) * a.run.dt) << ',' << csv_number(traj[i][0]) << ','
        << csv_number(traj[i][1]) << ',' << csv_number(traj[i][2]) << '\n';
    }
    write_text(a.trajectory, s.str());
  }
  if (!a.c.out.empty()) {
    std::ostringstream s;
    s << "t,dr,dg,db,dhat_r,dhat_g,dhat_b\n";
    for (std::size_t r = 0; r < sys.d.rows(); ++r) {
      const Quaternion d = sys.d(r, 0);
      const Quaternion h = sys.dhat(r, 0);
      s << csv_number(static_cast<double>(sys.t0 + r) * a.run.dt) << ',' << csv_number(d.x) << ','
        << csv_number(d.y) << ',' << csv_number(d.z) << ',' << csv_number(h.x) << ','
        << csv_number(h.y) << ',' << csv_number(h.z) << '\n';
    }
    write_text(a.c.out, s.str());
  }

  const std::string alg_name =
      fo.algorithm ? std::string(to_string(*fo.algorithm)) : "svd-" + std::string(to_string(fo.route));
  Json j;
  j["command"] = "lorenz-filter";
  j["e"] = number(sys.e);
  j["order"] = sys.order;
  j["system_shape"] = shape_json(sys.c);
  j["samples"] = traj.size();
  j["delay_samples"] = sys.delay;
  j["t0_samples"] = sys.t0;
  j["params"] = {{"alpha", a.run.alpha},     {"beta", a.run.beta},
                 {"rho", a.run.rho},         {"dt", a.run.dt},
                 {"horizon", a.run.horizon}, {"noise_sigma", a.run.noise_sigma},
                 {"algorithm", alg_name}};
  j["seed"] = seed;
  emit_json(j, a.c.json, out);
  txt << "lorenz filter: " << traj.size() << " samples, delay " << sys.delay << ", order "
      << sys.order << " (" << shape(sys.c) << ", " << alg_name << ")\n";
  txt << "  relative error e = " << fmt_sci(sys.e) << '\n';
  return kExitOk;
}

struct BenchArgs {
  Common c;
  std::string suite = "all";
  std::vector<std::size_t> k{5, 10, 20};
  std::size_t trials = 3;
  std::string dat;
};

int cmd_bench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
  std::ostream& txt = a.c.text(out, err);
  const std::uint64_t seed = a.c.resolved_seed();
  std::vector<BenchSuite> suites;
  if (a.suite == "all") {
    suites = {BenchSuite::outer_right, BenchSuite::outer_w_left, BenchSuite::pinv_all4};
  } else {
    suites = {parse_bench_suite(a.suite)};
  }
  std::vector<BenchRecord> records;
  for (BenchSuite s : suites) {
    auto r = run_bench(s, a.k, a.trials, seed);
    records.insert(records.end(), r.begin(), r.end());
  }
  if (a.c.out.empty()) {
    emit_csv(txt, records);
  } else {
    emit_csv(std::filesystem::path(a.c.out), records);
  }
  if (!a.dat.empty()) emit_dat(std::filesystem::path(a.dat), records);
  Json j;
  j["command"] = "bench";
  j["seed"] = seed;
  j["trials"] = a.trials;
  j["records"] = Json::array();
  for (const auto& r : records) j["records"].push_back(to_json(r));
  emit_json(j, a.c.json, out);
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Outer, Moore-Penrose, Drazin and group inverses of quaternion matrices", "quatinv"};
  app.require_subcommand(1);
  std::function<int()> action;

  PinvArgs pinv_args;
  auto* pinv_cmd = app.add_subcommand("pinv", "Moore-Penrose inverse");
  add_common(pinv_cmd, pinv_args.c, "Write X as .qmat");
  pinv_cmd->add_option("--in", pinv_args.in, "Input matrix A (.qmat)")->required();
  pinv_cmd->add_option("--algorithm", pinv_args.algorithm,
                       "svd-direct, svd-crep, frd-direct or frd-crep (overrides --route/--frd)");
  pinv_cmd->add_flag("--frd", pinv_args.frd, "Use the full-rank-factorization realization");
  pinv_cmd->callback([&] { action = [&] { return cmd_pinv(pinv_args, out, err); }; });

  OuterArgs outer_args;
  auto* outer_cmd = app.add_subcommand("outer", "Outer inverse S (TAS)^(1) T");
  add_common(outer_cmd, outer_args.c, "Write X as .qmat");
  outer_cmd->add_option("--in", outer_args.in, "Input matrix A (.qmat)")->required();
  outer_cmd->add_option("--s", outer_args.s, "Range generator S (.qmat)")->required();
  outer_cmd->add_option("--t", outer_args.t, "Null-space generator T (.qmat)")->required();
  outer_cmd->add_option("--side", outer_args.side, "Which spaces are prescribed")
      ->check(CLI::IsMember({"right", "left", "both"}))
      ->capture_default_str();
  outer_cmd->add_flag("--random-blocks", outer_args.random_blocks,
                      "Draw the free blocks of the {1}-inverse from --seed");
  outer_cmd->callback([&] { action = [&] { return cmd_outer(outer_args, out, err); }; });

  OuterWArgs outer_w_args;
  auto* outer_w_cmd = app.add_subcommand("outer-w", "Outer inverse from a generator W");
  add_common(outer_w_cmd, outer_w_args.c, "Write X as .qmat");
  outer_w_cmd->add_option("--in", outer_w_args.in, "Input matrix A (.qmat)")->required();
  outer_w_cmd->add_option("--w", outer_w_args.w, "Generator W (.qmat)")->required();
  outer_w_cmd->add_option("--side", outer_w_args.side, "Right or left spaces of W")
      ->check(CLI::IsMember({"right", "left"}))
      ->capture_default_str();
  outer_w_cmd->callback([&] { action = [&] { return cmd_outer_w(outer_w_args, out, err); }; });

  SpecialArgs drazin_args;
  auto* drazin_cmd = app.add_subcommand("drazin", "Drazin inverse");
  add_common(drazin_cmd, drazin_args.c, "Write X as .qmat");
  drazin_cmd->add_option("--in", drazin_args.in, "Square input matrix (.qmat)")->required();
  drazin_cmd->callback([&] { action = [&] { return cmd_special(drazin_args, false, out, err); }; });

  SpecialArgs group_args;
  auto* group_cmd = app.add_subcommand("group", "Group inverse (index at most 1)");
  add_common(group_cmd, group_args.c, "Write X as .qmat");
  group_cmd->add_option("--in", group_args.in, "Square input matrix (.qmat)")->required();
  group_cmd->callback([&] { action = [&] { return cmd_special(group_args, true, out, err); }; });

  SpecialArgs rank_args;
  auto* rank_cmd = app.add_subcommand("rank", "Numerical rank and singular values");
  add_common(rank_cmd, rank_args.c, "Unused");
  rank_cmd->add_option("--in", rank_args.in, "Input matrix (.qmat)")->required();
  rank_cmd->callback([&] { action = [&] { return cmd_rank(rank_args, out, err); }; });

  SvdArgs svd_args;
  auto* svd_cmd = app.add_subcommand("svd", "Quaternion singular value decomposition");
  add_common(svd_cmd, svd_args.c, "Write U as .qmat");
  svd_cmd->add_option("--in", svd_args.in, "Input matrix (.qmat)")->required();
  svd_cmd->add_option("--out-v", svd_args.out_v, "Write V as .qmat");
  svd_cmd->callback([&] { action = [&] { return cmd_svd(svd_args, out, err); }; });

  FrdArgs frd_args;
  auto* frd_cmd = app.add_subcommand("frd", "Full rank decomposition");
  add_common(frd_cmd, frd_args.c, "Write F as .qmat");
  frd_cmd->add_option("--in", frd_args.in, "Input matrix (.qmat)")->required();
  frd_cmd->add_option("--side", frd_args.side, "column: A = F G, row: A = G F")
      ->check(CLI::IsMember({"column", "row"}))
      ->capture_default_str();
  frd_cmd->add_option("--out-g", frd_args.out_g, "Write G as .qmat");
  frd_cmd->callback([&] { action = [&] { return cmd_frd(frd_args, out, err); }; });

  DeblurArgs deblur_args;
  auto* deblur_cmd = app.add_subcommand("deblur", "Color image deblurring");
  add_common(deblur_cmd, deblur_args.c, "Write the restored image (PPM)");
  deblur_cmd->add_option("--image", deblur_args.image,
                         "Input PPM with height p*q (default: synthetic image)");
  deblur_cmd->add_option("--width", deblur_args.width, "Synthetic image width")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  deblur_cmd->add_option("--p", deblur_args.blur.p, "Rows of the Gaussian factor")->capture_default_str();
  deblur_cmd->add_option("--q", deblur_args.blur.q, "Rows of the box factor")->capture_default_str();
  deblur_cmd->add_option("--sigma", deblur_args.blur.sigma, "Gaussian width")->capture_default_str();
  deblur_cmd->add_option("--r", deblur_args.blur.r, "Gaussian half bandwidth")->capture_default_str();
  deblur_cmd->add_option("--s", deblur_args.blur.s, "Box half bandwidth")->capture_default_str();
  deblur_cmd->add_option("--algorithm", deblur_args.algorithm, "Pseudoinverse realization")
      ->capture_default_str();
  deblur_cmd->add_flag("--compare-real", deblur_args.compare_real,
                       "Also solve the real block system");
  deblur_cmd->add_option("--out-blurred", deblur_args.out_blurred, "Write the blurred image (PPM)");
  deblur_cmd->add_option("--out-real", deblur_args.out_real,
                         "Write the real-block restoration (PPM, with --compare-real)");
  deblur_cmd->callback([&] { action = [&] { return cmd_deblur(deblur_args, out, err); }; });

  LorenzArgs lorenz_args;
  auto* lorenz_cmd = app.add_subcommand("lorenz-filter", "Lorenz-signal quaternion FIR filter");
  add_common(lorenz_cmd, lorenz_args.c, "Write t,dr,dg,db,dhat_r,dhat_g,dhat_b CSV");
  lorenz_cmd->add_option("--horizon,-T", lorenz_args.run.horizon, "Time horizon T")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  lorenz_cmd->add_option("--dt", lorenz_args.run.dt, "RK4 step / sampling interval")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  lorenz_cmd->add_option("--noise", lorenz_args.run.noise_sigma, "Noise sigma per component")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  lorenz_cmd->add_option("--alpha", lorenz_args.run.alpha)->capture_default_str();
  lorenz_cmd->add_option("--beta", lorenz_args.run.beta)->capture_default_str();
  lorenz_cmd->add_option("--rho", lorenz_args.run.rho)->capture_default_str();
  lorenz_cmd->add_option("--order", lorenz_args.order, "Filter order n (default: largest)");
  lorenz_cmd->add_option("--delay", lorenz_args.delay, "Delay in samples (default round(1/dt))");
  lorenz_cmd->add_option("--algorithm", lorenz_args.algorithm,
                         "svd (V Sigma^+ U^* on --route) or a pinv realization")
      ->capture_default_str();
  lorenz_cmd->add_option("--trajectory", lorenz_args.trajectory, "Write t,x,y,z CSV");
  lorenz_cmd->callback([&] { action = [&] { return cmd_lorenz(lorenz_args, out, err); }; });

  BenchArgs bench_args;
  auto* bench_cmd = app.add_subcommand("bench", "Timing and residual sweep");
  add_common(bench_cmd, bench_args.c, "Write the CSV here (default: stdout)");
  bench_cmd->add_option("--suite", bench_args.suite, "outer_right, outer_w_left, pinv_all4 or all")
      ->capture_default_str();
  bench_cmd->add_option("--k", bench_args.k, "Size parameters (A is 3k x 2k)")
      ->delimiter(',')
      ->capture_default_str();
  bench_cmd->add_option("--trials", bench_args.trials, "Trials per size")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench_cmd->add_option("--dat", bench_args.dat, "Also write a gnuplot .dat file");
  bench_cmd->callback([&] { action = [&] { return cmd_bench(bench_args, out, err); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    return action ? action() : kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace quatinv::cli
