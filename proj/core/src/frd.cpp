#include "quatinv/frd.hpp"

#include <numeric>
#include <utility>

#include "quatinv/qarray.hpp"
#include "quatinv/rank.hpp"

namespace quatinv {

namespace {

Eigen::Index idx(std::size_t n) { return static_cast<Eigen::Index>(n); }

// Quaternion entries held directly; row operations use Hamilton products.
class DirectStore {
 public:
  explicit DirectStore(const QMatrix& a) : a_(direct::from_qmatrix(a)) {}

  std::size_t rows() const { return a_.rows(); }
  std::size_t cols() const { return a_.cols(); }
  Quaternion get(std::size_t i, std::size_t j) const { return a_(i, j); }
  void swap_rows(std::size_t x, std::size_t y) { a_.swap_rows(x, y); }
  void swap_cols(std::size_t x, std::size_t y) { a_.swap_cols(x, y); }

  // row_i <- row_i - l * row_k over columns c0..
  void axpy(std::size_t i, std::size_t k, const Quaternion& l, std::size_t c0) {
    Quaternion* ri = a_.row_ptr(i);
    const Quaternion* rk = a_.row_ptr(k);
    for (std::size_t j = c0; j < a_.cols(); ++j) ri[j] -= l * rk[j];
  }
  // row_i <- l * row_i
  void scale(std::size_t i, const Quaternion& l) {
    Quaternion* ri = a_.row_ptr(i);
    for (std::size_t j = 0; j < a_.cols(); ++j) ri[j] = l * ri[j];
  }
  QMatrix top(std::size_t r) const { return direct::to_qmatrix(a_.block(0, 0, r, a_.cols())); }

 private:
  direct::QArray a_;
};

// First block row [W1, W2] of the complex representation; the same row
// operations are carried out with complex arithmetic on the two halves:
//   l * [R1, R2] = [l1 R1 - l2 conj(R2), l1 R2 + l2 conj(R1)].
class CrepStore {
 public:
  explicit CrepStore(const QMatrix& a) : n_(a.cols()), w_(to_crep_row_data(a)) {}

  std::size_t rows() const { return static_cast<std::size_t>(w_.rows()); }
  std::size_t cols() const { return n_; }
  Quaternion get(std::size_t i, std::size_t j) const {
    return Quaternion::from_pair(w_(idx(i), idx(j)), w_(idx(i), idx(n_ + j)));
  }
  void swap_rows(std::size_t x, std::size_t y) {
    if (x != y) w_.row(idx(x)).swap(w_.row(idx(y)));
  }
  void swap_cols(std::size_t x, std::size_t y) {
    if (x == y) return;
    w_.col(idx(x)).swap(w_.col(idx(y)));
    w_.col(idx(n_ + x)).swap(w_.col(idx(n_ + y)));
  }
  void axpy(std::size_t i, std::size_t k, const Quaternion& l, std::size_t c0) {
    const Complex l1 = l.first();
    const Complex l2 = l.second();
    const Eigen::Index len = idx(n_ - c0);
    const auto r1 = w_.row(idx(k)).segment(idx(c0), len);
    const auto r2 = w_.row(idx(k)).segment(idx(n_ + c0), len);
    w_.row(idx(i)).segment(idx(c0), len) -= l1 * r1 - l2 * r2.conjugate();
    w_.row(idx(i)).segment(idx(n_ + c0), len) -= l1 * r2 + l2 * r1.conjugate();
  }
  void scale(std::size_t i, const Quaternion& l) {
    const Complex l1 = l.first();
    const Complex l2 = l.second();
    const Eigen::RowVectorXcd r1 = w_.row(idx(i)).head(idx(n_));
    const Eigen::RowVectorXcd r2 = w_.row(idx(i)).tail(idx(n_));
    w_.row(idx(i)).head(idx(n_)) = l1 * r1 - l2 * r2.conjugate();
    w_.row(idx(i)).tail(idx(n_)) = l1 * r2 + l2 * r1.conjugate();
  }
  QMatrix top(std::size_t r) const {
    return {w_.topLeftCorner(idx(r), idx(n_)), w_.topRightCorner(idx(r), idx(n_))};
  }

 private:
  static CMatrix to_crep_row_data(const QMatrix& a) {
    CMatrix r(a.q1().rows(), 2 * a.q1().cols());
    r << a.q1(), a.q2();
    return r;
  }

  std::size_t n_;
  CMatrix w_;
};

// Complete-pivoting elimination for exactly r steps, then back substitution
// so the reduced rows become G = U11^{-1} U with unit pivots.
template <class Store>
FullRankFactorization column_form(const QMatrix& a, std::size_t r) {
  Store st(a);
  const std::size_t m = st.rows();
  const std::size_t n = st.cols();
  std::vector<std::size_t> colperm(n);
  std::iota(colperm.begin(), colperm.end(), 0);

  for (std::size_t k = 0; k < r; ++k) {
    std::size_t pi = k;
    std::size_t pj = k;
    double best = -1.0;
    for (std::size_t i = k; i < m; ++i) {
      for (std::size_t j = k; j < n; ++j) {
        const double v = st.get(i, j).norm2();
        if (v > best) {
          best = v;
          pi = i;
          pj = j;
        }
      }
    }
    st.swap_rows(k, pi);
    st.swap_cols(k, pj);
    std::swap(colperm[k], colperm[pj]);
    const Quaternion pinv = inverse(st.get(k, k));
    for (std::size_t i = k + 1; i < m; ++i) {
      const Quaternion f = st.get(i, k);
      if (f == Quaternion{}) continue;
      st.axpy(i, k, f * pinv, k);
    }
  }

  for (std::size_t k = r; k-- > 0;) {
    st.scale(k, inverse(st.get(k, k)));
    for (std::size_t i = 0; i < k; ++i) {
      const Quaternion f = st.get(i, k);
      if (f == Quaternion{}) continue;
      st.axpy(i, k, f, k);
    }
  }

  const QMatrix reduced = st.top(r);
  FullRankFactorization out;
  out.side = FrdSide::column;
  out.rank = r;
  out.pivots.assign(colperm.begin(), colperm.begin() + static_cast<std::ptrdiff_t>(r));
  out.tall = QMatrix(m, r);
  out.wide = QMatrix(r, n);
  for (std::size_t c = 0; c < r; ++c)
    for (std::size_t i = 0; i < m; ++i) out.tall.set(i, c, a(i, colperm[c]));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < r; ++i) out.wide.set(i, colperm[j], reduced(i, j));
  return out;
}

FullRankFactorization column_form(const QMatrix& a, Route route, double rtol) {
  const std::size_t r = rank(a, rtol);
  if (r == 0) {
    FullRankFactorization out;
    out.tall = QMatrix(a.rows(), 0);
    out.wide = QMatrix(0, a.cols());
    return out;
  }
  return route == Route::direct ? column_form<DirectStore>(a, r) : column_form<CrepStore>(a, r);
}

}  // namespace

QMatrix FullRankFactorization::product() const { return tall * wide; }

FullRankFactorization full_rank_decompose(const QMatrix& a, FrdSide side, Route route,
                                          double rtol) {
  if (side == FrdSide::column) return column_form(a, route, rtol);
  // A^* = F' G'  =>  A = G'^* F'^*, with F'^* the pivot rows of A.
  FullRankFactorization t = column_form(a.conj_transpose(), route, rtol);
  FullRankFactorization out;
  out.side = FrdSide::row;
  out.rank = t.rank;
  out.pivots = std::move(t.pivots);
  out.tall = t.wide.conj_transpose();
  out.wide = t.tall.conj_transpose();
  return out;
}

}  // namespace quatinv
