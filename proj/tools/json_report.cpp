#include "json_report.hpp"

#include <cmath>

namespace quatinv::cli {

Json number(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

Json to_json(const std::map<std::string, double>& m) {
  Json j = Json::object();
  for (const auto& [k, v] : m) j[k] = number(v);
  return j;
}

Json to_json(const RVector& v) {
  Json j = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) j.push_back(number(v(i)));
  return j;
}

Json shape_json(const QMatrix& a) { return Json::array({a.rows(), a.cols()}); }

Json to_json(const Classification& c) {
  return {
      {"is_one_inverse", c.is_one_inverse},
      {"is_outer", c.is_outer},
      {"range_matches", c.range_matches},
      {"nullspace_matches", c.nullspace_matches},
      {"unique_outer", c.unique_outer},
      {"is_12_unique", c.is_12_unique},
  };
}

Json to_json(const RankInfo& r) {
  return {{"rank_a", r.nu}, {"rank_range", r.s}, {"rank_null", r.t}, {"rank_core", r.tas}};
}

Json to_json(const InverseReport& rep) {
  Json j;
  j["construction"] = rep.construction;
  j["route"] = std::string(to_string(rep.route));
  j["side"] = rep.side == Side::right ? "right" : "left";
  j["exists"] = rep.exists;
  j["degenerate"] = rep.degenerate;
  j["shape"] = shape_json(rep.x);
  j["ranks"] = to_json(rep.ranks);
  j["classification"] = to_json(rep.flags);
  if (rep.has_left) {
    j["left_classification"] = to_json(rep.left_flags);
    j["sides_agree"] = rep.sides_agree;
  }
  j["residuals"] = to_json(rep.residuals);
  Json checks = Json::object();
  for (const auto& [k, v] : rep.subspace_checks) checks[k] = v;
  j["subspace_checks"] = checks;
  if (!rep.message.empty()) j["message"] = rep.message;
  return j;
}

Json to_json(const DrazinResult& d) {
  Json j;
  j["exists"] = d.exists;
  j["index"] = d.index;
  j["shape"] = shape_json(d.x);
  j["residuals"] = to_json(d.residuals);
  if (!d.message.empty()) j["message"] = d.message;
  return j;
}

Json to_json(const BenchRecord& r) {
  auto opt = [](const std::optional<double>& v) { return v ? number(*v) : Json(nullptr); };
  return {
      {"op", r.op},
      {"route", r.route},
      {"k", r.k},
      {"trials", r.trials},
      {"mean_seconds", number(r.mean_seconds)},
      {"res_outer", opt(r.res_outer)},
      {"res_one", opt(r.res_one)},
      {"res_p3", opt(r.res_p3)},
      {"res_p4", opt(r.res_p4)},
      {"route_diff", number(r.route_diff)},
  };
}

}  // namespace quatinv::cli
