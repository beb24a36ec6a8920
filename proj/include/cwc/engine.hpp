#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "cwc/code_core.hpp"
#include "cwc/landscape.hpp"
#include "cwc/qubo.hpp"

namespace cwc {

enum class EngineVariant { Bbht, GasConventional, GasProposed, ClassicalExhaustive };
enum class Y0Mode { RandomSample, Bound };
enum class Termination { ReachKnownMinimum, MaxClassicalQueries };

std::string_view to_string(EngineVariant v) noexcept;
EngineVariant parse_engine_variant(std::string_view text);

inline constexpr double kConventionalLambda = 1.34;
inline constexpr double kProposedLambda = 1.44;

struct EngineConfig {
    EngineVariant variant = EngineVariant::GasConventional;
    double lambda = kConventionalLambda;
    double k_cap = 1.0;
    Y0Mode y0_mode = Y0Mode::RandomSample;
    std::int64_t y0_bound = 0; ///< initial threshold in Bound mode
    std::uint64_t seed = 0;
    Termination termination = Termination::ReachKnownMinimum;
    std::uint64_t max_classical_queries = 100'000'000; ///< hard budget in both termination modes
    bool record_iterations = false;
};

/// Conventional GAS: random initial threshold, cap sqrt(2^q1), lambda 1.34.
EngineConfig conventional_gas_config(int q1, std::uint64_t seed);

/// Bound-driven initial threshold and rotation cap, lambda 1.44.
EngineConfig proposed_gas_config(std::int64_t y0, double k_cap, std::uint64_t seed);

struct IterationRecord {
    std::uint64_t rotations = 0; ///< L_i
    Assignment assignment = 0;
    std::int64_t value = 0;
    std::int64_t threshold = 0; ///< y_i used for this measurement
    bool improved = false;

    friend bool operator==(const IterationRecord&, const IterationRecord&) = default;
};

/// Best measured objective after `classical` measurements and `quantum` Grover operators.
struct BestPoint {
    std::uint64_t classical = 0;
    std::uint64_t quantum = 0;
    std::int64_t value = 0;

    friend bool operator==(const BestPoint&, const BestPoint&) = default;
};

struct GasTrace {
    std::vector<IterationRecord> iterations; ///< filled when record_iterations is set
    std::vector<BestPoint> best_by_query;    ///< step function, one point per decrease
    std::vector<std::int64_t> thresholds;    ///< y_0 then every accepted improvement
    std::uint64_t classical_queries = 0;
    std::uint64_t quantum_queries = 0;
    bool reached_target = false;
    std::uint64_t classical_to_target = 0;
    std::uint64_t quantum_to_target = 0;
    bool has_best = false;
    Assignment best_assignment = 0;
    std::int64_t best_value = 0;

    friend bool operator==(const GasTrace&, const GasTrace&) = default;
};

/// Conventional or proposed GAS over an exact landscape with the analytic amplification model.
/// The target for ReachKnownMinimum is landscape.min_value().
GasTrace run_gas(const ObjectiveLandscape& landscape, const EngineConfig& config, Rng& rng);
GasTrace run_gas(const ObjectiveLandscape& landscape, const EngineConfig& config);

struct BbhtTrace {
    std::uint64_t classical_queries = 0;
    std::uint64_t quantum_queries = 0;
    Assignment found = 0;
    std::int64_t found_value = 0;
    double max_k = 1.0; ///< largest k reached, for cap checks
};

/// BBHT search for any assignment with value < y_target; k grows by lambda up to sqrt(2^q1).
/// Throws ExhaustionError when max_queries measurements find nothing.
BbhtTrace run_bbht(const ObjectiveLandscape& landscape, std::int64_t y_target, double lambda, Rng& rng,
                   std::uint64_t max_queries = 100'000'000);

/// Weight-(M-1) assignments and their objective values, the reduced classical search space.
class ClassicalSearchSpace {
public:
    ClassicalSearchSpace(const QuboProblem& qubo, const CodeParams& params, std::uint64_t max_size = 50'000'000);

    std::size_t size() const noexcept { return masks_.size(); }
    std::span<const Assignment> masks() const noexcept { return masks_; }
    std::span<const std::int64_t> values() const noexcept { return values_; }
    std::int64_t min_value() const noexcept { return min_value_; }

private:
    std::vector<Assignment> masks_;
    std::vector<std::int64_t> values_;
    std::int64_t min_value_ = 0;
};

/// Visit the space in a uniformly random order until min_value() is seen.
GasTrace run_classical_exhaustive(const ClassicalSearchSpace& space, Rng& rng, bool record_iterations = false);
GasTrace run_classical_exhaustive(const BitMatrix& Pprime, const CodeParams& params, const QuboProblem& qubo,
                                  std::uint64_t seed);

enum class QueryDomain { Classical, Quantum };

/// Queries spent when the target was reached (or total queries if it never was).
std::uint64_t queries_to_target(const GasTrace& trace, QueryDomain domain) noexcept;

struct CurvePoint {
    std::uint64_t query = 0;
    double value = 0.0;
};

/// Mean best-so-far objective at every query count where any trace changes; a trace joins
/// the mean at its first measurement and keeps its final value after termination.
std::vector<CurvePoint> average_best_curve(std::span<const GasTrace> traces, QueryDomain domain);

struct CdfPoint {
    std::uint64_t queries = 0;
    double cdf = 0.0;
};

/// Empirical CDF of queries-to-target, one point per distinct value.
std::vector<CdfPoint> queries_cdf(std::span<const GasTrace> traces, QueryDomain domain);

/// Worker count for trial runners: hardware concurrency, at least one.
unsigned default_workers() noexcept;

/// Run fn(i) for i in [0, count) on a worker pool; result order follows i.
template <class Result, class Fn>
std::vector<Result> run_trials(std::uint64_t count, Fn&& fn, unsigned workers = default_workers())
{
    std::vector<Result> results(count);
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto body = [&] {
        try {
            for (std::uint64_t i = next++; i < count; i = next++) results[i] = fn(i);
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next = count;
        }
    };
    workers = static_cast<unsigned>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(workers, count)));
    if (workers == 1) {
        body();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(body);
    }
    if (failure) std::rethrow_exception(failure);
    return results;
}

/// Per-iteration dump for debugging.
std::string trace_to_json(const GasTrace& trace);

} // namespace cwc
