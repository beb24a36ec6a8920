#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "cwc/code_core.hpp"
#include "cwc/qubo.hpp"

namespace cwc {

/// Default q1 guard for full enumeration; the CWC_GAS_MAX_Q1 environment variable overrides it.
inline constexpr int kDefaultMaxLandscapeQ1 = 26;
int landscape_q1_guard();

/// Every objective value over F_2^q1, sorted ascending, with the rank -> assignment map.
class ObjectiveLandscape {
public:
    ObjectiveLandscape() = default;
    ObjectiveLandscape(int q1, std::vector<std::int64_t> values, std::vector<std::uint32_t> perm);

    int q1() const noexcept { return q1_; }
    std::uint64_t size() const noexcept { return values_.size(); }
    std::int64_t min_value() const noexcept { return values_.front(); }
    std::int64_t max_value() const noexcept { return values_.back(); }

    std::span<const std::int64_t> values() const noexcept { return values_; }
    std::span<const std::uint32_t> perm() const noexcept { return perm_; }

    /// Number of assignments with value strictly below y.
    std::uint64_t count_below(std::int64_t y) const noexcept;

private:
    int q1_ = 0;
    std::vector<std::int64_t> values_;
    std::vector<std::uint32_t> perm_;
};

/// Enumerate all 2^q1 assignments (Gray-code order, O(q1) per step) and sort.
ObjectiveLandscape build_landscape(const QuboProblem& qubo, int max_q1 = landscape_q1_guard());

using Rng = std::mt19937_64;

/// Independent stream for trial `index` of a run seeded with `master`.
Rng trial_rng(std::uint64_t master, std::uint64_t index);

struct Measurement {
    Assignment assignment = 0;
    std::int64_t value = 0;
    bool good = false; ///< value < threshold
};

/// Outcome of measuring G^L A_y |0>: good with probability sin^2((2L+1) theta),
/// then uniform within the good or bad class.
Measurement sample_measurement(const ObjectiveLandscape& landscape, std::int64_t y, std::uint64_t L, Rng& rng);

/// Same draw with t = count_below(y) already known; ranks below t are the good class.
Measurement sample_with_count(const ObjectiveLandscape& landscape, std::uint64_t t, std::uint64_t L, Rng& rng);

} // namespace cwc
