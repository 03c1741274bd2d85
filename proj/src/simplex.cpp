#include "eccm/simplex.hpp"

#include <algorithm>
#include <cmath>

namespace eccm {

namespace {

constexpr double kCostTol = 1e-9;
constexpr double kPivotTol = 1e-11;

// Solves an n x n linear system by Gaussian elimination with partial
// pivoting. n is the (small) variable count of the caller's primal.
Vec solve_dense(std::vector<Vec> a, Vec rhs) {
  const std::size_t n = rhs.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    std::swap(a[piv], a[col]);
    std::swap(rhs[piv], rhs[col]);
    if (std::abs(a[col][col]) < 1e-13)
      throw SolverError("simplex: singular basis while recovering multipliers");
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const double factor = a[r][col] / a[col][col];
      if (factor == 0.0) continue;
      for (std::size_t k = col; k < n; ++k) a[r][k] -= factor * a[col][k];
      rhs[r] -= factor * rhs[col];
    }
  }
  Vec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] / a[i][i];
  return x;
}

// Standard-form problem: min f'z s.t. E z = g, z >= 0. E is n x m with n
// small. Two-phase dense tableau, Bland's rule throughout.
class StandardSimplex {
 public:
  StandardSimplex(std::vector<Vec> e, Vec g, Vec f)
      : e0_(std::move(e)), f_(std::move(f)), n_(g.size()), m_(f_.size()) {
    sign_.assign(n_, 1.0);
    for (std::size_t i = 0; i < n_; ++i) {
      if (g[i] < 0.0) {
        sign_[i] = -1.0;
        g[i] = -g[i];
        for (double& v : e0_[i]) v = -v;
      }
    }
    // rows 0..n-1: constraints; row n: phase-2 costs; row n+1: phase-1 costs.
    tab_.assign(n_ + 2, Vec(m_ + n_ + 1, 0.0));
    basis_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < m_; ++j) tab_[i][j] = e0_[i][j];
      tab_[i][m_ + i] = 1.0;
      tab_[i][m_ + n_] = g[i];
      basis_[i] = m_ + i;
    }
    for (std::size_t j = 0; j < m_; ++j) tab_[n_][j] = f_[j];
    double gsum = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
      gsum += g[i];
      for (std::size_t j = 0; j < m_; ++j) tab_[n_ + 1][j] -= tab_[i][j];
    }
    tab_[n_ + 1][m_ + n_] = -gsum;
    phase1_scale_ = 1.0 + gsum;
  }

  LpStatus solve(long iter_cap, long& iters) {
    // Phase 1: minimize the artificial infeasibility.
    if (!run_phase(n_ + 1, m_ + n_, iter_cap, iters)) return LpStatus::kUnbounded;
    if (-tab_[n_ + 1][m_ + n_] > 1e-9 * phase1_scale_) return LpStatus::kInfeasible;
    drive_out_artificials();
    // Phase 2: artificial columns may not re-enter.
    if (!run_phase(n_, m_, iter_cap, iters)) return LpStatus::kUnbounded;
    return LpStatus::kOptimal;
  }

  double objective() const { return -tab_[n_][m_ + n_]; }

  Vec solution() const {
    Vec z(m_, 0.0);
    for (std::size_t i = 0; i < n_; ++i)
      if (basis_[i] < m_) z[basis_[i]] = tab_[i][m_ + n_];
    return z;
  }

  // Multipliers of the equality rows w.r.t. the caller's original signs;
  // these are the primal point of the dualized inequality problem.
  Vec multipliers() const {
    std::vector<Vec> bt(n_, Vec(n_, 0.0));  // B transpose
    Vec cb(n_, 0.0);
    for (std::size_t i = 0; i < n_; ++i) {
      const std::size_t col = basis_[i];
      if (col < m_) {
        for (std::size_t r = 0; r < n_; ++r) bt[i][r] = e0_[r][col];
        cb[i] = f_[col];
      } else {
        bt[i][col - m_] = 1.0;
      }
    }
    Vec pi = solve_dense(std::move(bt), std::move(cb));
    for (std::size_t i = 0; i < n_; ++i) pi[i] *= sign_[i];
    return pi;
  }

 private:
  bool run_phase(std::size_t cost_row, std::size_t enter_limit, long iter_cap, long& iters) {
    while (true) {
      // Bland: smallest eligible column index.
      std::size_t enter = enter_limit;
      for (std::size_t j = 0; j < enter_limit; ++j) {
        if (tab_[cost_row][j] < -kCostTol) {
          enter = j;
          break;
        }
      }
      if (enter == enter_limit) return true;  // optimal for this phase

      std::size_t leave = n_;
      double best_ratio = 0.0;
      for (std::size_t i = 0; i < n_; ++i) {
        const double a = tab_[i][enter];
        if (a <= kPivotTol) continue;
        const double ratio = tab_[i][m_ + n_] / a;
        if (leave == n_ || ratio < best_ratio - 1e-12 ||
            (std::abs(ratio - best_ratio) <= 1e-12 && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave == n_) return false;  // unbounded direction

      pivot(leave, enter);
      if (++iters > iter_cap) throw SolverError("simplex: iteration cap exceeded");
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    Vec& pr = tab_[row];
    const double p = pr[col];
    for (double& v : pr) v /= p;
    pr[col] = 1.0;
    for (std::size_t i = 0; i < tab_.size(); ++i) {
      if (i == row) continue;
      const double factor = tab_[i][col];
      if (factor == 0.0) continue;
      Vec& ri = tab_[i];
      for (std::size_t j = 0; j <= m_ + n_; ++j) ri[j] -= factor * pr[j];
      ri[col] = 0.0;
    }
    basis_[row] = col;
  }

  void drive_out_artificials() {
    for (std::size_t i = 0; i < n_; ++i) {
      if (basis_[i] < m_) continue;
      std::size_t col = m_;
      for (std::size_t j = 0; j < m_; ++j) {
        if (std::abs(tab_[i][j]) > kPivotTol) {
          col = j;
          break;
        }
      }
      // A row with no structural pivot is redundant; its artificial stays
      // basic at level zero and never re-enters the running.
      if (col < m_) pivot(i, col);
    }
  }

  std::vector<Vec> e0_;  // sign-normalized constraint matrix
  Vec f_;
  std::size_t n_, m_;
  Vec sign_;
  std::vector<Vec> tab_;
  std::vector<std::size_t> basis_;
  double phase1_scale_ = 1.0;
};

}  // namespace

LpResult solve_inequality_lp(const std::vector<Vec>& rows, const Vec& b, const Vec& c,
                             long iter_cap) {
  const std::size_t m = rows.size();
  const std::size_t n = c.size();
  if (m == 0) throw std::invalid_argument("solve_inequality_lp: no rows");
  if (b.size() != m) throw std::invalid_argument("solve_inequality_lp: rhs size mismatch");
  for (const Vec& r : rows)
    if (r.size() != n) throw std::invalid_argument("solve_inequality_lp: row size mismatch");

  // Dual of (min c'x : A x <= b): min b'z s.t. A'z = -c, z >= 0.
  std::vector<Vec> e(n, Vec(m, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t r = 0; r < m; ++r) e[i][r] = rows[r][i];
  Vec g(n);
  for (std::size_t i = 0; i < n; ++i) g[i] = -c[i];

  StandardSimplex solver(std::move(e), std::move(g), b);
  LpResult result;
  const LpStatus dual_status = solver.solve(iter_cap, result.iterations);
  if (dual_status == LpStatus::kUnbounded) {
    result.status = LpStatus::kInfeasible;
    return result;
  }
  if (dual_status == LpStatus::kInfeasible) {
    result.status = LpStatus::kUnbounded;
    return result;
  }

  result.status = LpStatus::kOptimal;
  result.x = solver.multipliers();
  result.value = dot(c, result.x);

  const double scale = 1.0 + std::abs(result.value);
  if (std::abs(result.value + solver.objective()) > 1e-6 * scale)
    throw SolverError("simplex: duality gap in recovered solution");
  for (std::size_t r = 0; r < m; ++r)
    if (dot(rows[r], result.x) > b[r] + 1e-6)
      throw SolverError("simplex: recovered solution violates a constraint");
  return result;
}

}  // namespace eccm
