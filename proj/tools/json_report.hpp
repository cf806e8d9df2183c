#pragma once

#include <map>
#include <string>

#include "json.hpp"
#include "quatinv/bench.hpp"
#include "quatinv/geninv.hpp"
#include "quatinv/qmatrix.hpp"
#include "quatinv/special.hpp"

namespace quatinv::cli {

using Json = nlohmann::ordered_json;

Json to_json(const Classification& c);
Json to_json(const RankInfo& r);
Json to_json(const InverseReport& rep);
Json to_json(const DrazinResult& d);
Json to_json(const BenchRecord& r);
Json shape_json(const QMatrix& a);
Json to_json(const RVector& v);

/// NaN and infinities are written as null.
Json number(double v);
Json to_json(const std::map<std::string, double>& m);

}  // namespace quatinv::cli
