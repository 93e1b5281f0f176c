#pragma once

// Regression constants for the acceptance suite, fitted once with
// `acceptance_test --fit` and frozen here.

namespace seplab::calibration {

// best_sparse_cut: sparsity <= kKappa * log2(n) / vcong_lb.
inline constexpr double kKappa = 0.205;

// Separator size: |S| <= kKappaSep * sqrt(m) * log2(m + 2).
inline constexpr double kKappaSep = 0.290;

// Congestion lower bound of string graphs: vcong_lb * sqrt(m) / n^2 >= kCFit.
inline constexpr double kCFit = 0.291;

// Line embedding spread: spread * log2(n) >= kCSpread * (pair sum of d_s = 1).
inline constexpr double kCSpread = 1.60;

}  // namespace seplab::calibration
