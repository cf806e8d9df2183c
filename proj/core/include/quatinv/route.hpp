#pragma once

#include <string_view>

namespace quatinv {

/// Computational realization of a quaternion kernel.
///   direct: Hamilton-product arithmetic on quaternion arrays.
///   crep:   complex-representation blocks with complex BLAS-style kernels.
enum class Route { direct, crep };

std::string_view to_string(Route r);
/// Parses "direct" or "crep"; throws ParameterError otherwise.
Route parse_route(std::string_view s);

}  // namespace quatinv
