#pragma once

#include <cstdint>

#include "quatinv/qmatrix.hpp"
#include "quatinv/route.hpp"
#include "quatinv/svd.hpp"

namespace quatinv {

/// How the free blocks K, L, M of a {1}-inverse are chosen.
/// Zero blocks give the Moore-Penrose inverse of W.
struct FreeBlocks {
  bool random = false;
  std::uint64_t seed = 0;
};

/// W^(1) = V [[Sigma_s^{-1}, K], [L, M]] U^* for W (q x p) of rank s.
///
/// K is s x (q-s), L is (p-s) x s and M is (p-s) x (q-s); empty blocks are
/// 0-sized matrices. Throws DimensionError if a block does not conform.
QMatrix one_inverse(const QMatrix& w, const QMatrix& k, const QMatrix& l, const QMatrix& m,
                    Route route = Route::crep, double rtol = 0.0);

/// Same, with blocks generated from `blocks` once s is known.
QMatrix one_inverse(const QMatrix& w, const FreeBlocks& blocks = {}, Route route = Route::crep,
                    double rtol = 0.0);

namespace detail {

struct FreeBlockSet {
  QMatrix k, l, m;
};

FreeBlockSet make_free_blocks(std::size_t s, std::size_t q, std::size_t p,
                              const FreeBlocks& blocks);

/// (W^(1))^C assembled as V^C Y^C (U^*)^C from a structure-restored SVD.
CMatrix one_inverse_crep_full(const QSvdResult& svd, std::size_t s, const FreeBlockSet& fb);

/// W^(1) assembled with Hamilton products from a direct SVD.
direct::QArray one_inverse_direct(const direct::Svd& svd, std::size_t s,
                                  const FreeBlockSet& fb);

}  // namespace detail

}  // namespace quatinv
