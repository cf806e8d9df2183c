#pragma once

#include <cstddef>
#include <map>
#include <string>

#include "quatinv/qmatrix.hpp"
#include "quatinv/route.hpp"

namespace quatinv {

/// Smallest k >= 0 with rank(A^{k+1}) = rank(A^k), capped at n.
/// Powers are renormalized at every step. Throws DimensionError if A is not square.
std::size_t mat_index(const QMatrix& a, double rtol = 0.0);

struct DrazinResult {
  QMatrix x;
  std::size_t index = 0;
  bool exists = true;
  /// drazin: ||A^{k+1} X - A^k||, outer: ||XAX - X||, commute: ||AX - XA||
  /// (group inverse: one: ||AXA - A|| instead of drazin).
  std::map<std::string, double> residuals;
  std::string message;
};

/// A^D through the W-route with W = A^k, k = Ind(A). A is scaled by 1/||A||_F
/// before taking powers and the scale is restored on the result.
DrazinResult drazin(const QMatrix& a, Route route = Route::crep, double rtol = 0.0);

/// A^# for Ind(A) <= 1; exists = false otherwise.
DrazinResult group_inverse(const QMatrix& a, Route route = Route::crep, double rtol = 0.0);

}  // namespace quatinv
