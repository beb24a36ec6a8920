#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cwc/code_core.hpp"

namespace cwc {

/// Grover success probability after L iterations with t marked items out of N.
double success_prob_L(std::uint64_t L, std::uint64_t t, std::uint64_t N);

/// floor(pi/4 sqrt(N/t)). Throws NoSolutionError for t = 0.
std::uint64_t L_opt(std::uint64_t t, std::uint64_t N);

/// Success probability when L is drawn uniformly from {0, ..., k-1} (real k >= 1).
double success_prob_k(double k, std::uint64_t t, std::uint64_t N);

/// Expected cost per success, k / P_k(t), the quantity the rotation cap minimises.
double cost_ratio(double k, std::uint64_t t, std::uint64_t N);

/// Lower bound on the number of optimal assignments when w <= d and A(n-1, d, w) < M - 1.
/// Throws InapplicableBoundError otherwise; callers then fall back to 1.
std::uint64_t t_lower(const CodeParams& params, std::int64_t a_prev);

/// Exactly known A(n, d, w) for n <= 8, even d; nullopt outside the table.
std::optional<std::int64_t> known_A(int n, int d, int w);

/// ceil((1 + sqrt 2)/2 * sqrt(2^q1 / t_low)).
std::uint64_t k_opt_upper(std::uint64_t t_low, int q1);

struct KoptResult {
    double k_opt = 1.0;
    double lo = 1.0;
    double hi = 1.0;
    std::vector<double> extrema; ///< stationary points of k / P_k found in [lo, hi]
    bool ratio_not_small = false; ///< t / 2^q1 above the configured approximation threshold
};

struct KoptOptions {
    double tolerance = 1e-9;
    double small_ratio_threshold = 1e-2;
};

/// argmin of k / P_k(t) over [1, k_opt_upper(t, q1)].
KoptResult k_opt(std::uint64_t t, int q1, const KoptOptions& options = {});

/// argmin of k / P_k(t) over an arbitrary interval [lo, hi], lo >= 1.
KoptResult k_argmin(std::uint64_t t, int q1, double lo, double hi, const KoptOptions& options = {});

} // namespace cwc
