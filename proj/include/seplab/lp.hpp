#pragma once

#include <cstddef>
#include <vector>

namespace seplab::lp {

// minimize c.x  subject to  A x = b,  x >= 0, with b >= 0.
// A is row-major rows x cols. Dense two-phase tableau simplex; meant for the
// few-thousand-column programs of the exact congestion oracle.
struct StandardForm {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> a;  // rows * cols
  std::vector<double> b;  // rows
  std::vector<double> c;  // cols

  double& at(std::size_t r, std::size_t col) { return a[r * cols + col]; }
};

enum class Status { kOptimal, kInfeasible, kUnbounded, kIterationLimit };

struct Solution {
  Status status = Status::kInfeasible;
  double objective = 0.0;
  std::vector<double> x;
  std::size_t pivots = 0;
};

Solution solve(const StandardForm& problem, std::size_t max_pivots = 200000);

}  // namespace seplab::lp
