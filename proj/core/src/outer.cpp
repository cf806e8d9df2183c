#include <algorithm>
#include <string>

#include "quatinv/crep.hpp"
#include "quatinv/errors.hpp"
#include "quatinv/frd.hpp"
#include "quatinv/geninv.hpp"
#include "quatinv/qarray.hpp"
#include "quatinv/rank.hpp"
#include "quatinv/subspace.hpp"
#include "quatinv/svd.hpp"

namespace quatinv {

namespace {

struct Core {
  QMatrix x;
  std::size_t tas = 0;
  bool exists = true;
};

void require(bool ok, const std::string& what, const QMatrix& a, const QMatrix& g) {
  if (!ok) {
    throw DimensionError(what + ": A is " + shape_string(a.rows(), a.cols()) +
                         ", generator is " + shape_string(g.rows(), g.cols()));
  }
}

// X = S (T A S)^(1) T. Each route reads the core rank off its own SVD.
Core urquhart(const QMatrix& a, const QMatrix& s, const QMatrix& t, const GenInvOptions& opt) {
  const std::size_t n = s.rows();
  const std::size_t m = t.cols();
  Core out;
  if (opt.route == Route::direct) {
    const direct::QArray sa = direct::from_qmatrix(s);
    const direct::QArray ta = direct::from_qmatrix(t);
    const direct::QArray r = direct::matmul(direct::matmul(ta, direct::from_qmatrix(a)), sa);
    const direct::Svd sv = direct::svd(r);
    if (!sv.sigma.empty() && sv.sigma[0] > 0.0) {
      const double thr = rank_threshold(sv.sigma[0], r.rows(), r.cols(), opt.rank_rtol);
      out.tas = static_cast<std::size_t>(
          std::count_if(sv.sigma.begin(), sv.sigma.end(), [&](double v) { return v > thr; }));
    }
    if (out.tas == 0) {
      out.x = QMatrix(n, m);
      return out;
    }
    const auto fb = detail::make_free_blocks(out.tas, r.rows(), r.cols(), opt.free_blocks);
    const direct::QArray y = detail::one_inverse_direct(sv, out.tas, fb);
    out.x = direct::to_qmatrix(direct::matmul(direct::matmul(sa, y), ta));
    return out;
  }

  const CMatrix sc = to_crep(s).data();
  const CMatrix tc = to_crep(t).data();
  const CMatrix rc = tc * to_crep(a).data() * sc;
  const QMatrix r = from_crep(rc);
  out.tas = rank(r, opt.rank_rtol);
  if (out.tas == 0) {
    out.x = QMatrix(n, m);
    return out;
  }
  const QSvdResult sv = crep::svd(r, opt.rank_rtol);
  const auto fb = detail::make_free_blocks(out.tas, r.rows(), r.cols(), opt.free_blocks);
  const CMatrix yc = detail::one_inverse_crep_full(sv, out.tas, fb);
  const CMatrix xr = sc.topRows(static_cast<Eigen::Index>(n)) * yc * tc;
  out.x = from_crep_row(xr, m);
  return out;
}

// X = S (T A S)^{-1} T for full-rank factors S (n x s), T (s x m). Existence
// is decided on the complex representation for both routes.
Core w_core(const QMatrix& a, const QMatrix& s, const QMatrix& t, const GenInvOptions& opt) {
  const std::size_t n = s.rows();
  const std::size_t m = t.cols();
  const std::size_t k = s.cols();
  Core out;
  out.x = QMatrix(n, m);
  if (opt.route == Route::direct) {
    const direct::QArray sa = direct::from_qmatrix(s);
    const direct::QArray ta = direct::from_qmatrix(t);
    const direct::QArray r = direct::matmul(direct::matmul(ta, direct::from_qmatrix(a)), sa);
    out.tas = rank(direct::to_qmatrix(r), opt.rank_rtol);
    if (out.tas < k) {
      out.exists = false;
      return out;
    }
    const auto rinv = direct::inverse(r);
    if (!rinv) {
      out.exists = false;
      return out;
    }
    out.x = direct::to_qmatrix(direct::matmul(direct::matmul(sa, *rinv), ta));
    return out;
  }

  const CMatrix sc = to_crep(s).data();
  const CMatrix tc = to_crep(t).data();
  const CMatrix rc = tc * to_crep(a).data() * sc;
  out.tas = rank(from_crep(rc), opt.rank_rtol);
  if (out.tas < k) {
    out.exists = false;
    return out;
  }
  const CMatrix rinv = rc.partialPivLu().inverse();
  const CMatrix xr = sc.topRows(static_cast<Eigen::Index>(n)) * rinv * tc;
  out.x = from_crep_row(xr, m);
  return out;
}

Classification classify(const RankInfo& r) {
  Classification c;
  c.is_one_inverse = r.tas == r.nu;
  c.range_matches = r.tas == r.s;
  c.nullspace_matches = r.tas == r.t;
  c.is_outer = c.range_matches || c.nullspace_matches;
  c.unique_outer = c.range_matches && c.nullspace_matches;
  c.is_12_unique = c.unique_outer && c.is_one_inverse;
  return c;
}

InverseReport start(std::string name, const GenInvOptions& opt, Side side) {
  InverseReport rep;
  rep.construction = std::move(name);
  rep.route = opt.route;
  rep.side = side;
  return rep;
}

// Returns whether verification (ranks, residuals, subspace checks) is wanted.
bool finish(InverseReport& rep, const QMatrix& a, const Core& core, const GenInvOptions& opt) {
  rep.x = core.x;
  rep.exists = core.exists;
  rep.degenerate = core.exists && core.tas == 0;
  rep.ranks.tas = core.tas;
  if (opt.verify) rep.residuals = penrose_residuals(a, rep.x);
  return opt.verify;
}

}  // namespace

std::map<std::string, double> penrose_residuals(const QMatrix& a, const QMatrix& x) {
  const QMatrix ax = a * x;
  const QMatrix xa = x * a;
  return {
      {"outer", (xa * x - x).fro_norm()},
      {"one", (ax * a - a).fro_norm()},
      {"p3", (ax.conj_transpose() - ax).fro_norm()},
      {"p4", (xa.conj_transpose() - xa).fro_norm()},
  };
}

InverseReport outer_right(const QMatrix& a, const QMatrix& s1, const QMatrix& t1,
                          const GenInvOptions& opt) {
  require(s1.rows() == a.cols(), "outer_right: S1 must have cols(A) rows", a, s1);
  require(t1.cols() == a.rows(), "outer_right: T1 must have rows(A) columns", a, t1);
  InverseReport rep = start("outer_right", opt, Side::right);
  const Core core = urquhart(a, s1, t1, opt);
  if (!finish(rep, a, core, opt)) return rep;
  rep.ranks = {rank(a, opt.rank_rtol), rank(s1, opt.rank_rtol), rank(t1, opt.rank_rtol), core.tas};
  rep.flags = classify(rep.ranks);
  rep.subspace_checks["right_range"] = right_range_equal(rep.x, s1);
  rep.subspace_checks["right_null"] = right_null_equal(rep.x, t1);
  return rep;
}

InverseReport outer_left(const QMatrix& a, const QMatrix& s2, const QMatrix& t2,
                         const GenInvOptions& opt) {
  require(s2.cols() == a.rows(), "outer_left: S2 must have rows(A) columns", a, s2);
  require(t2.rows() == a.cols(), "outer_left: T2 must have cols(A) rows", a, t2);
  InverseReport rep = start("outer_left", opt, Side::left);
  const Core core = urquhart(a, t2, s2, opt);
  if (!finish(rep, a, core, opt)) return rep;
  rep.ranks = {rank(a, opt.rank_rtol), rank(s2, opt.rank_rtol), rank(t2, opt.rank_rtol), core.tas};
  rep.flags = classify(rep.ranks);
  rep.subspace_checks["left_range"] = left_range_equal(rep.x, s2);
  rep.subspace_checks["left_null"] = left_null_equal(rep.x, t2);
  return rep;
}

InverseReport outer_both(const QMatrix& a, const QMatrix& s, const QMatrix& t,
                         const GenInvOptions& opt) {
  require(s.rows() == a.cols() && s.cols() == a.rows(), "outer_both: S must be cols(A) x rows(A)",
          a, s);
  require(t.rows() == a.cols() && t.cols() == a.rows(), "outer_both: T must be cols(A) x rows(A)",
          a, t);
  InverseReport rep = start("outer_both", opt, Side::right);
  const Core core = urquhart(a, s, t, opt);
  if (!finish(rep, a, core, opt)) return rep;
  const std::size_t rs = rank(s, opt.rank_rtol);
  const std::size_t rt = rank(t, opt.rank_rtol);
  rep.ranks = {rank(a, opt.rank_rtol), rs, rt, core.tas};
  rep.flags = classify(rep.ranks);
  rep.has_left = true;
  rep.left_flags = classify({rep.ranks.nu, rt, rs, core.tas});
  auto& chk = rep.subspace_checks;
  chk["right_range"] = right_range_equal(rep.x, s);
  chk["right_null"] = right_null_equal(rep.x, t);
  chk["left_range"] = left_range_equal(rep.x, t);
  chk["left_null"] = left_null_equal(rep.x, s);
  rep.sides_agree = (rep.flags.unique_outer == rep.left_flags.unique_outer) &&
                    ((chk["right_range"] && chk["right_null"]) ==
                     (chk["left_range"] && chk["left_null"]));
  return rep;
}

InverseReport outer_w_right(const QMatrix& a, const QMatrix& w1, const GenInvOptions& opt) {
  require(w1.rows() == a.cols() && w1.cols() == a.rows(),
          "outer_w_right: W1 must be cols(A) x rows(A)", a, w1);
  InverseReport rep = start("outer_w_right", opt, Side::right);
  const FullRankFactorization frd =
      full_rank_decompose(w1, FrdSide::column, opt.route, opt.rank_rtol);
  Core core;
  if (frd.empty()) {
    core.x = QMatrix(a.cols(), a.rows());
  } else {
    core = w_core(a, frd.tall, frd.wide, opt);
  }
  const bool verify = finish(rep, a, core, opt);
  rep.ranks = {verify ? rank(a, opt.rank_rtol) : 0, frd.rank, frd.rank, core.tas};
  if (rep.exists && verify) {
    rep.flags = classify(rep.ranks);
  } else if (!rep.exists) {
    rep.message = "T1*A*S1 is singular: rank " + std::to_string(core.tas) + " < rank(W1) = " +
                  std::to_string(frd.rank) + "; no outer inverse with these spaces exists";
  }
  if (verify) {
    rep.subspace_checks["right_range"] = rep.exists && right_range_equal(rep.x, w1);
    rep.subspace_checks["right_null"] = rep.exists && right_null_equal(rep.x, w1);
  }
  return rep;
}

InverseReport outer_w_left(const QMatrix& a, const QMatrix& w2, const GenInvOptions& opt) {
  require(w2.rows() == a.cols() && w2.cols() == a.rows(),
          "outer_w_left: W2 must be cols(A) x rows(A)", a, w2);
  InverseReport rep = start("outer_w_left", opt, Side::left);
  // W2 = T2 S2 with T2 = tall (n x s) and S2 = wide (s x m, pivot rows of W2).
  const FullRankFactorization frd = full_rank_decompose(w2, FrdSide::row, opt.route, opt.rank_rtol);
  Core core;
  if (frd.empty()) {
    core.x = QMatrix(a.cols(), a.rows());
  } else {
    core = w_core(a, frd.tall, frd.wide, opt);
  }
  const bool verify = finish(rep, a, core, opt);
  rep.ranks = {verify ? rank(a, opt.rank_rtol) : 0, frd.rank, frd.rank, core.tas};
  if (rep.exists && verify) {
    rep.flags = classify(rep.ranks);
  } else if (!rep.exists) {
    rep.message = "S2*A*T2 is singular: rank " + std::to_string(core.tas) + " < rank(W2) = " +
                  std::to_string(frd.rank) + "; no outer inverse with these spaces exists";
  }
  if (verify) {
    rep.subspace_checks["left_range"] = rep.exists && left_range_equal(rep.x, w2);
    rep.subspace_checks["left_null"] = rep.exists && left_null_equal(rep.x, w2);
  }
  return rep;
}

std::string_view to_string(PinvAlgorithm a) {
  switch (a) {
    case PinvAlgorithm::svd_direct: return "svd-direct";
    case PinvAlgorithm::svd_crep: return "svd-crep";
    case PinvAlgorithm::frd_direct: return "frd-direct";
    case PinvAlgorithm::frd_crep: return "frd-crep";
  }
  return "unknown";
}

PinvAlgorithm parse_pinv_algorithm(std::string_view s) {
  std::string t(s);
  for (char& c : t)
    if (c == '_') c = '-';
  for (PinvAlgorithm a : {PinvAlgorithm::svd_direct, PinvAlgorithm::svd_crep,
                          PinvAlgorithm::frd_direct, PinvAlgorithm::frd_crep}) {
    if (t == to_string(a)) return a;
  }
  throw ParameterError("unknown pinv algorithm '" + std::string(s) +
                       "' (expected svd-direct, svd-crep, frd-direct or frd-crep)");
}

PinvAlgorithm pinv_algorithm(bool frd, Route route) {
  if (frd) return route == Route::direct ? PinvAlgorithm::frd_direct : PinvAlgorithm::frd_crep;
  return route == Route::direct ? PinvAlgorithm::svd_direct : PinvAlgorithm::svd_crep;
}

InverseReport pinv_report(const QMatrix& a, PinvAlgorithm alg, double rank_rtol, bool verify) {
  GenInvOptions opt;
  opt.rank_rtol = rank_rtol;
  opt.verify = verify;
  opt.route = (alg == PinvAlgorithm::svd_direct || alg == PinvAlgorithm::frd_direct)
                  ? Route::direct
                  : Route::crep;
  const QMatrix ah = a.conj_transpose();
  const bool frd = alg == PinvAlgorithm::frd_direct || alg == PinvAlgorithm::frd_crep;
  InverseReport rep = frd ? outer_w_right(a, ah, opt) : outer_right(a, ah, ah, opt);
  rep.construction = "pinv/" + std::string(to_string(alg));
  return rep;
}

QMatrix pinv(const QMatrix& a, PinvAlgorithm alg, double rank_rtol) {
  return pinv_report(a, alg, rank_rtol).x;
}

QMatrix pinv(const QMatrix& a, Route route, double rank_rtol) {
  return pinv(a, pinv_algorithm(false, route), rank_rtol);
}

}  // namespace quatinv
