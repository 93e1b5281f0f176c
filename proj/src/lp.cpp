#include "seplab/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace seplab::lp {

namespace {

constexpr double kPivotTol = 1e-9;
constexpr double kCostTol = 1e-10;
// Consecutive degenerate pivots before switching from Dantzig to Bland.
constexpr std::size_t kDegenerateStreak = 50;

class Tableau {
 public:
  Tableau(const StandardForm& p)
      : rows_(p.rows), orig_(p.cols), width_(p.cols + p.rows + 1),
        t_((p.rows + 1) * width_, 0.0), basis_(p.rows), allowed_(p.cols + p.rows, 1) {
    for (std::size_t r = 0; r < rows_; ++r) {
      double* row = t_.data() + r * width_;
      for (std::size_t j = 0; j < orig_; ++j) row[j] = p.a[r * orig_ + j];
      row[orig_ + r] = 1.0;
      row[width_ - 1] = p.b[r];
      basis_[r] = orig_ + r;
    }
  }

  double* row(std::size_t r) { return t_.data() + r * width_; }
  double* obj() { return row(rows_); }
  double rhs(std::size_t r) { return row(r)[width_ - 1]; }

  // Objective row for costs `cost` over all columns (originals + artificials).
  void price(const std::vector<double>& cost) {
    double* z = obj();
    for (std::size_t j = 0; j + 1 < width_; ++j) z[j] = cost[j];
    z[width_ - 1] = 0.0;
    for (std::size_t r = 0; r < rows_; ++r) {
      const double cb = cost[basis_[r]];
      if (cb == 0.0) continue;
      const double* tr = row(r);
      for (std::size_t j = 0; j < width_; ++j) z[j] -= cb * tr[j];
    }
  }

  void pivot(std::size_t pr, std::size_t q) {
    double* prow = row(pr);
    const double inv = 1.0 / prow[q];
    for (std::size_t j = 0; j < width_; ++j) prow[j] *= inv;
    prow[q] = 1.0;
    for (std::size_t r = 0; r <= rows_; ++r) {
      if (r == pr) continue;
      double* tr = row(r);
      const double f = tr[q];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < width_; ++j) tr[j] -= f * prow[j];
      tr[q] = 0.0;
    }
    basis_[pr] = q;
  }

  // Runs simplex iterations on the current objective row.
  Status iterate(std::size_t max_pivots, std::size_t& pivots) {
    std::size_t degenerate = 0;
    while (pivots < max_pivots) {
      const double* z = obj();
      const bool bland = degenerate >= kDegenerateStreak;
      std::size_t q = width_;
      double best = -kCostTol;
      for (std::size_t j = 0; j + 1 < width_; ++j) {
        if (!allowed_[j] || z[j] >= -kCostTol) continue;
        if (bland) {
          q = j;
          break;
        }
        if (z[j] < best) {
          best = z[j];
          q = j;
        }
      }
      if (q == width_) return Status::kOptimal;

      std::size_t pr = rows_;
      double ratio = std::numeric_limits<double>::infinity();
      for (std::size_t r = 0; r < rows_; ++r) {
        const double a = row(r)[q];
        if (a <= kPivotTol) continue;
        const double rr = rhs(r) / a;
        if (rr < ratio - 1e-12 || (rr <= ratio + 1e-12 && pr < rows_ && basis_[r] < basis_[pr])) {
          ratio = rr;
          pr = r;
        }
      }
      if (pr == rows_) return Status::kUnbounded;
      degenerate = ratio <= 1e-12 ? degenerate + 1 : 0;
      pivot(pr, q);
      ++pivots;
    }
    return Status::kIterationLimit;
  }

  std::size_t rows_;
  std::size_t orig_;
  std::size_t width_;
  std::vector<double> t_;
  std::vector<std::size_t> basis_;
  std::vector<char> allowed_;
};

}  // namespace

Solution solve(const StandardForm& p, std::size_t max_pivots) {
  Solution sol;
  Tableau tab(p);
  const std::size_t total = p.cols + p.rows;

  // Phase 1: minimize the sum of artificials.
  std::vector<double> cost(total, 0.0);
  for (std::size_t r = 0; r < p.rows; ++r) cost[p.cols + r] = 1.0;
  tab.price(cost);
  Status st = tab.iterate(max_pivots, sol.pivots);
  if (st == Status::kIterationLimit) {
    sol.status = st;
    return sol;
  }
  double scale = 1.0;
  for (double v : p.b) scale += std::fabs(v);
  if (-tab.obj()[tab.width_ - 1] > 1e-8 * scale) {
    sol.status = Status::kInfeasible;
    return sol;
  }
  // Drive zero-level artificials out of the basis where possible; rows where
  // that fails are redundant and stay pinned at zero.
  for (std::size_t r = 0; r < p.rows; ++r) {
    if (tab.basis_[r] < p.cols) continue;
    const double* tr = tab.row(r);
    for (std::size_t j = 0; j < p.cols; ++j) {
      if (std::fabs(tr[j]) > kPivotTol) {
        tab.pivot(r, j);
        break;
      }
    }
  }
  for (std::size_t j = p.cols; j < total; ++j) tab.allowed_[j] = 0;

  // Phase 2.
  std::fill(cost.begin(), cost.end(), 0.0);
  for (std::size_t j = 0; j < p.cols; ++j) cost[j] = p.c[j];
  tab.price(cost);
  st = tab.iterate(max_pivots, sol.pivots);
  sol.status = st;
  if (st != Status::kOptimal) return sol;

  sol.x.assign(p.cols, 0.0);
  for (std::size_t r = 0; r < p.rows; ++r) {
    if (tab.basis_[r] < p.cols) sol.x[tab.basis_[r]] = std::max(0.0, tab.rhs(r));
  }
  sol.objective = 0.0;
  for (std::size_t j = 0; j < p.cols; ++j) sol.objective += p.c[j] * sol.x[j];
  return sol;
}

}  // namespace seplab::lp
