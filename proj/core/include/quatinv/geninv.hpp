#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>

#include "quatinv/one_inverse.hpp"
#include "quatinv/qmatrix.hpp"
#include "quatinv/route.hpp"

namespace quatinv {

struct GenInvOptions {
  Route route = Route::crep;
  FreeBlocks free_blocks{};
  /// Relative rank tolerance (0 selects max(m, n) * eps).
  double rank_rtol = 0.0;
  /// When false only X and the core rank are computed (no classification
  /// ranks, residuals or subspace checks); used for timing.
  bool verify = true;
};

enum class Side { right, left };

/// Classification of X = S (TAS)^(1) T read off the four ranks.
///
///   is_one_inverse    <=> rank(TAS) = rank(A)
///   range_matches     <=> rank(TAS) = rank of the range generator
///   nullspace_matches <=> rank(TAS) = rank of the null-space generator
///   is_outer          <=> range_matches or nullspace_matches
///   unique_outer      <=> range_matches and nullspace_matches
///   is_12_unique      <=> unique_outer and is_one_inverse
struct Classification {
  bool is_one_inverse = false;
  bool is_outer = false;
  bool range_matches = false;
  bool nullspace_matches = false;
  bool unique_outer = false;
  bool is_12_unique = false;
};

struct RankInfo {
  std::size_t nu = 0;   ///< rank A
  std::size_t s = 0;    ///< rank of the range generator
  std::size_t t = 0;    ///< rank of the null-space generator
  std::size_t tas = 0;  ///< rank of the core product
};

struct InverseReport {
  std::string construction;
  Route route = Route::crep;
  Side side = Side::right;
  QMatrix x;
  /// False when the construction's invertibility condition fails
  /// (singular core in the W-route, Ind(A) > 1 for the group inverse).
  bool exists = true;
  /// Core product of rank 0: X is the zero matrix.
  bool degenerate = false;
  Classification flags;
  RankInfo ranks;
  /// outer: ||XAX - X||, one: ||AXA - A||, p3: ||(AX)^* - AX||, p4: ||(XA)^* - XA||.
  std::map<std::string, double> residuals;
  /// Rank-concatenation verification of the prescribed spaces.
  std::map<std::string, bool> subspace_checks;
  /// Both-sided construction only: left classification on the swapped pair.
  bool has_left = false;
  Classification left_flags;
  bool sides_agree = true;
  std::string message;
};

/// X = S1 (T1 A S1)^(1) T1 with A (m x n), S1 (n x p), T1 (q x m).
InverseReport outer_right(const QMatrix& a, const QMatrix& s1, const QMatrix& t1,
                          const GenInvOptions& opt = {});

/// X = T2 (S2 A T2)^(1) S2 with S2 (l x m), T2 (n x t); left spaces of S2, T2.
InverseReport outer_left(const QMatrix& a, const QMatrix& s2, const QMatrix& t2,
                         const GenInvOptions& opt = {});

/// X = S (TAS)^(1) T with S, T (n x m): right spaces (S, T), left spaces (T, S).
InverseReport outer_both(const QMatrix& a, const QMatrix& s, const QMatrix& t,
                         const GenInvOptions& opt = {});

/// W1 = S1 T1 (column-form full rank factorization), X = S1 (T1 A S1)^{-1} T1.
InverseReport outer_w_right(const QMatrix& a, const QMatrix& w1, const GenInvOptions& opt = {});

/// W2 = T2 S2 (row-form full rank factorization), X = T2 (S2 A T2)^{-1} S2.
InverseReport outer_w_left(const QMatrix& a, const QMatrix& w2, const GenInvOptions& opt = {});

/// The four realizations of the Moore-Penrose inverse.
enum class PinvAlgorithm {
  svd_direct,  ///< Urquhart form with S = T = A^*, direct arithmetic
  svd_crep,    ///< Urquhart form with S = T = A^*, complex representation
  frd_direct,  ///< W-route with W = A^*, direct arithmetic
  frd_crep,    ///< W-route with W = A^*, complex representation
};

std::string_view to_string(PinvAlgorithm a);
/// Accepts svd-direct, svd-crep, frd-direct, frd-crep (or underscores).
PinvAlgorithm parse_pinv_algorithm(std::string_view s);
PinvAlgorithm pinv_algorithm(bool frd, Route route);

InverseReport pinv_report(const QMatrix& a, PinvAlgorithm alg, double rank_rtol = 0.0,
                          bool verify = true);
QMatrix pinv(const QMatrix& a, PinvAlgorithm alg = PinvAlgorithm::svd_crep,
             double rank_rtol = 0.0);
QMatrix pinv(const QMatrix& a, Route route, double rank_rtol = 0.0);

/// Fills residuals["outer"], ["one"], ["p3"], ["p4"] for X against A.
std::map<std::string, double> penrose_residuals(const QMatrix& a, const QMatrix& x);

}  // namespace quatinv
