#include "cwc/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cwc/checked.hpp"
#include "cwc/errors.hpp"

namespace cwc {

namespace {

double theta_of(std::uint64_t t, std::uint64_t N)
{
    return std::asin(std::sqrt(static_cast<double>(t) / static_cast<double>(N)));
}

void require_counts(std::uint64_t t, std::uint64_t N)
{
    if (N == 0 || t > N) throw ParameterError("solution count must satisfy 0 <= t <= N, N >= 1");
}

} // namespace

double success_prob_L(std::uint64_t L, std::uint64_t t, std::uint64_t N)
{
    require_counts(t, N);
    const double s = std::sin((2.0 * static_cast<double>(L) + 1.0) * theta_of(t, N));
    return s * s;
}

std::uint64_t L_opt(std::uint64_t t, std::uint64_t N)
{
    require_counts(t, N);
    if (t == 0) throw NoSolutionError("L_opt undefined without solutions");
    return static_cast<std::uint64_t>(
        std::floor(std::numbers::pi / 4.0 * std::sqrt(static_cast<double>(N) / static_cast<double>(t))));
}

double success_prob_k(double k, std::uint64_t t, std::uint64_t N)
{
    require_counts(t, N);
    if (t == 0) throw NoSolutionError("P_k undefined without solutions");
    if (k < 1.0) throw ParameterError("k must be at least 1");
    if (t == N) return 1.0;
    const double theta = theta_of(t, N);
    return 0.5 - std::sin(4.0 * k * theta) / (4.0 * k * std::sin(2.0 * theta));
}

double cost_ratio(double k, std::uint64_t t, std::uint64_t N) { return k / success_prob_k(k, t, N); }

std::uint64_t t_lower(const CodeParams& params, std::int64_t a_prev)
{
    if (params.w > params.d)
        throw InapplicableBoundError("solution-count bound needs w <= d");
    if (a_prev >= params.M - 1)
        throw InapplicableBoundError("solution-count bound needs A(n-1, d, w) < M - 1");
    const int overlap = params.w - params.d / 2;
    if (overlap < 1) throw InapplicableBoundError("solution-count bound needs w - d/2 >= 1");
    if (overlap == 1) return static_cast<std::uint64_t>(factorial(params.w));
    std::int64_t best = binomial(params.w, 2);
    for (int i = 3; i <= overlap; ++i) best = std::min(best, binomial(params.w, i));
    return static_cast<std::uint64_t>(best);
}

namespace {

struct KnownA {
    int n, d, w;
    std::int64_t value;
};

// Maximum-clique search results over all weight-w words, n <= 8.
constexpr KnownA kKnownA[] = {
        {1, 2, 1, 1},
        {2, 2, 1, 2},
        {2, 2, 2, 1},
        {2, 4, 2, 1},
        {3, 2, 1, 3},
        {3, 2, 2, 3},
        {3, 4, 2, 1},
        {3, 2, 3, 1},
        {3, 4, 3, 1},
        {3, 6, 3, 1},
        {4, 2, 1, 4},
        {4, 2, 2, 6},
        {4, 4, 2, 2},
        {4, 2, 3, 4},
        {4, 4, 3, 1},
        {4, 6, 3, 1},
        {4, 2, 4, 1},
        {4, 4, 4, 1},
        {4, 6, 4, 1},
        {4, 8, 4, 1},
        {5, 2, 1, 5},
        {5, 2, 2, 10},
        {5, 4, 2, 2},
        {5, 2, 3, 10},
        {5, 4, 3, 2},
        {5, 6, 3, 1},
        {5, 2, 4, 5},
        {5, 4, 4, 1},
        {5, 6, 4, 1},
        {5, 8, 4, 1},
        {5, 2, 5, 1},
        {5, 4, 5, 1},
        {5, 6, 5, 1},
        {5, 8, 5, 1},
        {5, 10, 5, 1},
        {6, 2, 1, 6},
        {6, 2, 2, 15},
        {6, 4, 2, 3},
        {6, 2, 3, 20},
        {6, 4, 3, 4},
        {6, 6, 3, 2},
        {6, 2, 4, 15},
        {6, 4, 4, 3},
        {6, 6, 4, 1},
        {6, 8, 4, 1},
        {6, 2, 5, 6},
        {6, 4, 5, 1},
        {6, 6, 5, 1},
        {6, 8, 5, 1},
        {6, 10, 5, 1},
        {6, 2, 6, 1},
        {6, 4, 6, 1},
        {6, 6, 6, 1},
        {6, 8, 6, 1},
        {6, 10, 6, 1},
        {6, 12, 6, 1},
        {7, 2, 1, 7},
        {7, 2, 2, 21},
        {7, 4, 2, 3},
        {7, 2, 3, 35},
        {7, 4, 3, 7},
        {7, 6, 3, 2},
        {7, 2, 4, 35},
        {7, 4, 4, 7},
        {7, 6, 4, 2},
        {7, 8, 4, 1},
        {7, 2, 5, 21},
        {7, 4, 5, 3},
        {7, 6, 5, 1},
        {7, 8, 5, 1},
        {7, 10, 5, 1},
        {7, 2, 6, 7},
        {7, 4, 6, 1},
        {7, 6, 6, 1},
        {7, 8, 6, 1},
        {7, 10, 6, 1},
        {7, 12, 6, 1},
        {7, 2, 7, 1},
        {7, 4, 7, 1},
        {7, 6, 7, 1},
        {7, 8, 7, 1},
        {7, 10, 7, 1},
        {7, 12, 7, 1},
        {7, 14, 7, 1},
        {8, 2, 1, 8},
        {8, 2, 2, 28},
        {8, 4, 2, 4},
        {8, 2, 3, 56},
        {8, 4, 3, 8},
        {8, 6, 3, 2},
        {8, 2, 4, 70},
        {8, 4, 4, 14},
        {8, 6, 4, 2},
        {8, 8, 4, 2},
        {8, 2, 5, 56},
        {8, 4, 5, 8},
        {8, 6, 5, 2},
        {8, 8, 5, 1},
        {8, 10, 5, 1},
        {8, 2, 6, 28},
        {8, 4, 6, 4},
        {8, 6, 6, 1},
        {8, 8, 6, 1},
        {8, 10, 6, 1},
        {8, 12, 6, 1},
        {8, 2, 7, 8},
        {8, 4, 7, 1},
        {8, 6, 7, 1},
        {8, 8, 7, 1},
        {8, 10, 7, 1},
        {8, 12, 7, 1},
        {8, 14, 7, 1},
        {8, 2, 8, 1},
        {8, 4, 8, 1},
        {8, 6, 8, 1},
        {8, 8, 8, 1},
        {8, 10, 8, 1},
        {8, 12, 8, 1},
        {8, 14, 8, 1},
        {8, 16, 8, 1},
};

} // namespace

std::optional<std::int64_t> known_A(int n, int d, int w)
{
    for (const auto& e : kKnownA)
        if (e.n == n && e.d == d && e.w == w) return e.value;
    if (n >= 1 && n <= 8 && w >= 1 && w <= n && d > 2 * w) return 1;
    return std::nullopt;
}

std::uint64_t k_opt_upper(std::uint64_t t_low, int q1)
{
    if (t_low == 0) throw NoSolutionError("k_opt_upper needs t_low >= 1");
    const double factor = (1.0 + std::numbers::sqrt2) / 2.0;
    return static_cast<std::uint64_t>(std::ceil(factor * std::sqrt(std::ldexp(1.0, q1) / static_cast<double>(t_low))));
}

namespace {

// Sign of d/dk (k / P_k) is the sign of P - k P'.
double cost_slope(double k, double theta, double alpha)
{
    const double s = std::sin(4.0 * k * theta);
    const double p = 0.5 - s / (4.0 * k * alpha);
    const double dp = -(4.0 * theta * k * std::cos(4.0 * k * theta) - s) / (4.0 * alpha * k * k);
    return p - k * dp;
}

} // namespace

KoptResult k_argmin(std::uint64_t t, int q1, double lo, double hi, const KoptOptions& options)
{
    const std::uint64_t N = std::uint64_t{1} << q1;
    require_counts(t, N);
    if (t == 0) throw NoSolutionError("k_opt undefined without solutions");
    if (lo < 1.0 || hi < lo) throw ParameterError("k search interval must satisfy 1 <= lo <= hi");

    KoptResult res;
    res.lo = lo;
    res.hi = hi;
    res.ratio_not_small = static_cast<double>(t) / static_cast<double>(N) > options.small_ratio_threshold;
    if (t == N) {
        res.k_opt = lo;
        return res;
    }

    const double theta = theta_of(t, N);
    const double alpha = std::sin(2.0 * theta);
    // An eighth of the quarter period of sin(4k theta); extrema are at least that far apart.
    const double step = std::max(std::numbers::pi / (64.0 * theta), 1e-3);
    double a = lo;
    double fa = cost_slope(a, theta, alpha);
    while (a < hi) {
        const double b = std::min(a + step, hi);
        const double fb = cost_slope(b, theta, alpha);
        if ((fa < 0.0 && fb >= 0.0) || (fa > 0.0 && fb <= 0.0)) {
            double left = a, right = b, fleft = fa;
            while (right - left > options.tolerance) {
                const double mid = 0.5 * (left + right);
                const double fmid = cost_slope(mid, theta, alpha);
                if ((fleft < 0.0) == (fmid < 0.0)) {
                    left = mid;
                    fleft = fmid;
                } else {
                    right = mid;
                }
            }
            res.extrema.push_back(0.5 * (left + right));
        }
        a = b;
        fa = fb;
    }

    double best_k = lo;
    double best_h = cost_ratio(lo, t, N);
    auto consider = [&](double k) {
        const double h = cost_ratio(k, t, N);
        if (h < best_h) {
            best_h = h;
            best_k = k;
        }
    };
    for (double k : res.extrema) consider(k);
    consider(hi);
    res.k_opt = best_k;
    return res;
}

KoptResult k_opt(std::uint64_t t, int q1, const KoptOptions& options)
{
    const double hi = static_cast<double>(k_opt_upper(t, q1));
    return k_argmin(t, q1, 1.0, std::max(hi, 1.0), options);
}

} // namespace cwc
