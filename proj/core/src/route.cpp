#include "quatinv/route.hpp"

#include <string>

#include "quatinv/errors.hpp"

namespace quatinv {

std::string_view to_string(Route r) { return r == Route::direct ? "direct" : "crep"; }

Route parse_route(std::string_view s) {
  if (s == "direct") return Route::direct;
  if (s == "crep") return Route::crep;
  throw ParameterError("unknown route '" + std::string(s) + "' (expected direct or crep)");
}

}  // namespace quatinv
