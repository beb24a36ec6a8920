#include "cwc/landscape.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>

#include "cwc/errors.hpp"

namespace cwc {

int landscape_q1_guard()
{
    if (const char* env = std::getenv("CWC_GAS_MAX_Q1")) {
        try {
            return std::stoi(env);
        } catch (const std::exception&) {
            throw ParameterError(std::string("CWC_GAS_MAX_Q1 is not an integer: ") + env);
        }
    }
    return kDefaultMaxLandscapeQ1;
}

ObjectiveLandscape::ObjectiveLandscape(int q1, std::vector<std::int64_t> values, std::vector<std::uint32_t> perm)
    : q1_(q1), values_(std::move(values)), perm_(std::move(perm))
{
    if (values_.size() != (std::uint64_t{1} << q1_) || perm_.size() != values_.size())
        throw ParameterError("landscape must hold exactly 2^q1 values");
}

std::uint64_t ObjectiveLandscape::count_below(std::int64_t y) const noexcept
{
    return static_cast<std::uint64_t>(std::lower_bound(values_.begin(), values_.end(), y) - values_.begin());
}

ObjectiveLandscape build_landscape(const QuboProblem& qubo, int max_q1)
{
    const int q1 = qubo.q1;
    if (q1 > max_q1 || q1 > 31)
        throw ResourceError("q1=" + std::to_string(q1) + " exceeds the enumeration guard of " +
                            std::to_string(std::min(max_q1, 31)) + "; raise CWC_GAS_MAX_Q1 or use a sampling method");
    const std::uint64_t N = std::uint64_t{1} << q1;

    // Symmetric couplings and the running field sum_k x_k S[j][k] for the Gray walk.
    std::vector<std::int64_t> sym(static_cast<std::size_t>(q1) * q1, 0);
    for (int r = 0; r < q1; ++r)
        for (int c = r + 1; c < q1; ++c) {
            sym[static_cast<std::size_t>(r) * q1 + c] = qubo.coeff(r, c);
            sym[static_cast<std::size_t>(c) * q1 + r] = qubo.coeff(r, c);
        }
    std::vector<std::int64_t> field(static_cast<std::size_t>(q1), 0);
    std::vector<std::int64_t> by_assignment(N);

    Assignment x = 0;
    std::int64_t energy = qubo.constant;
    by_assignment[0] = energy;
    for (std::uint64_t step = 1; step < N; ++step) {
        const int j = std::countr_zero(step);
        const std::int64_t delta = qubo.coeff(j, j) + field[static_cast<std::size_t>(j)];
        const bool turning_on = ((x >> j) & 1U) == 0;
        energy += turning_on ? delta : -delta;
        x ^= Assignment{1} << j;
        const std::int64_t* col = &sym[static_cast<std::size_t>(j) * q1];
        if (turning_on)
            for (int i = 0; i < q1; ++i) field[static_cast<std::size_t>(i)] += col[i];
        else
            for (int i = 0; i < q1; ++i) field[static_cast<std::size_t>(i)] -= col[i];
        by_assignment[x] = energy;
    }

    const auto [lo_it, hi_it] = std::minmax_element(by_assignment.begin(), by_assignment.end());
    const std::int64_t lo = *lo_it;
    const std::int64_t hi = *hi_it;

    std::vector<std::uint32_t> perm(N);
    if (static_cast<std::uint64_t>(hi - lo) < (std::uint64_t{1} << 32)) {
        // Pack (value - min, index) so one integer sort yields value order with index tie-break.
        std::vector<std::uint64_t> keys(N);
        for (std::uint64_t i = 0; i < N; ++i)
            keys[i] = (static_cast<std::uint64_t>(by_assignment[i] - lo) << 32) | i;
        std::sort(keys.begin(), keys.end());
        for (std::uint64_t r = 0; r < N; ++r) perm[r] = static_cast<std::uint32_t>(keys[r] & 0xffffffffU);
    } else {
        for (std::uint64_t i = 0; i < N; ++i) perm[i] = static_cast<std::uint32_t>(i);
        std::stable_sort(perm.begin(), perm.end(),
                         [&](std::uint32_t a, std::uint32_t b) { return by_assignment[a] < by_assignment[b]; });
    }
    std::vector<std::int64_t> values(N);
    for (std::uint64_t r = 0; r < N; ++r) values[r] = by_assignment[perm[r]];
    return ObjectiveLandscape(q1, std::move(values), std::move(perm));
}

Rng trial_rng(std::uint64_t master, std::uint64_t index)
{
    // SplitMix64 finaliser over (master, index) gives well-separated seeds.
    auto mix = [](std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    const std::uint64_t a = mix(master);
    const std::uint64_t b = mix(a ^ mix(index + 1));
    // seed_seq keeps 32 bits per entry
    std::seed_seq seq{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                      static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
    return Rng(seq);
}

Measurement sample_with_count(const ObjectiveLandscape& landscape, std::uint64_t t, std::uint64_t L, Rng& rng)
{
    const std::uint64_t N = landscape.size();
    bool good = false;
    if (t == N) {
        good = true;
    } else if (t > 0) {
        const double theta = std::asin(std::sqrt(static_cast<double>(t) / static_cast<double>(N)));
        const double s = std::sin((2.0 * static_cast<double>(L) + 1.0) * theta);
        good = std::uniform_real_distribution<double>(0.0, 1.0)(rng) < s * s;
    }
    const std::uint64_t rank = good ? std::uniform_int_distribution<std::uint64_t>(0, t - 1)(rng)
                                    : std::uniform_int_distribution<std::uint64_t>(t, N - 1)(rng);
    return Measurement{landscape.perm()[rank], landscape.values()[rank], good};
}

Measurement sample_measurement(const ObjectiveLandscape& landscape, std::int64_t y, std::uint64_t L, Rng& rng)
{
    return sample_with_count(landscape, landscape.count_below(y), L, rng);
}

} // namespace cwc
