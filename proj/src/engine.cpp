#include "cwc/engine.hpp"

#include <bit>
#include <cmath>
#include <map>

#include <nlohmann/json.hpp>

#include "cwc/checked.hpp"
#include "cwc/errors.hpp"

namespace cwc {

std::string_view to_string(EngineVariant v) noexcept
{
    switch (v) {
    case EngineVariant::Bbht: return "bbht";
    case EngineVariant::GasConventional: return "gas-conventional";
    case EngineVariant::GasProposed: return "gas-proposed";
    case EngineVariant::ClassicalExhaustive: return "classical-exhaustive";
    }
    return "unknown";
}

EngineVariant parse_engine_variant(std::string_view text)
{
    for (auto v : {EngineVariant::Bbht, EngineVariant::GasConventional, EngineVariant::GasProposed,
                   EngineVariant::ClassicalExhaustive})
        if (text == to_string(v)) return v;
    throw ParameterError("unknown engine variant '" + std::string(text) + "'");
}

EngineConfig conventional_gas_config(int q1, std::uint64_t seed)
{
    EngineConfig c;
    c.variant = EngineVariant::GasConventional;
    c.lambda = kConventionalLambda;
    c.k_cap = std::sqrt(std::ldexp(1.0, q1));
    c.y0_mode = Y0Mode::RandomSample;
    c.seed = seed;
    return c;
}

EngineConfig proposed_gas_config(std::int64_t y0, double k_cap, std::uint64_t seed)
{
    EngineConfig c;
    c.variant = EngineVariant::GasProposed;
    c.lambda = kProposedLambda;
    c.k_cap = k_cap;
    c.y0_mode = Y0Mode::Bound;
    c.y0_bound = y0;
    c.seed = seed;
    return c;
}

namespace {

std::uint64_t draw_rotations(double k, Rng& rng)
{
    const auto top = static_cast<std::uint64_t>(std::ceil(k)) - 1;
    return std::uniform_int_distribution<std::uint64_t>(0, top)(rng);
}

void note_value(GasTrace& trace, Assignment x, std::int64_t value)
{
    if (trace.has_best && value >= trace.best_value) return;
    trace.has_best = true;
    trace.best_value = value;
    trace.best_assignment = x;
    trace.best_by_query.push_back({trace.classical_queries, trace.quantum_queries, value});
}

} // namespace

GasTrace run_gas(const ObjectiveLandscape& landscape, const EngineConfig& config, Rng& rng)
{
    if (config.lambda < 1.0) throw ParameterError("lambda must be at least 1");
    if (config.k_cap < 1.0) throw ParameterError("k_cap must be at least 1");

    GasTrace trace;
    const std::int64_t target = landscape.min_value();
    std::int64_t y = 0;
    if (config.y0_mode == Y0Mode::RandomSample) {
        // x0 uniform over F_2^q1 is a uniform rank in the sorted landscape.
        const auto rank = std::uniform_int_distribution<std::uint64_t>(0, landscape.size() - 1)(rng);
        y = landscape.values()[rank];
        note_value(trace, landscape.perm()[rank], y);
    } else {
        y = config.y0_bound;
    }
    trace.thresholds.push_back(y);

    auto done = [&] { return config.termination == Termination::ReachKnownMinimum && y <= target; };
    if (done()) {
        trace.reached_target = true;
        return trace;
    }

    std::uint64_t t = landscape.count_below(y);
    double k = 1.0;
    while (trace.classical_queries < config.max_classical_queries) {
        const std::uint64_t L = draw_rotations(k, rng);
        const Measurement m = sample_with_count(landscape, t, L, rng);
        trace.classical_queries += 1;
        trace.quantum_queries += L;
        note_value(trace, m.assignment, m.value);
        const bool improved = m.value < y;
        if (config.record_iterations) trace.iterations.push_back({L, m.assignment, m.value, y, improved});
        if (improved) {
            y = m.value;
            t = landscape.count_below(y);
            k = 1.0;
            trace.thresholds.push_back(y);
            if (done()) {
                trace.reached_target = true;
                trace.classical_to_target = trace.classical_queries;
                trace.quantum_to_target = trace.quantum_queries;
                return trace;
            }
        } else {
            k = std::min(config.lambda * k, config.k_cap);
        }
    }
    return trace;
}

GasTrace run_gas(const ObjectiveLandscape& landscape, const EngineConfig& config)
{
    Rng rng = trial_rng(config.seed, 0);
    return run_gas(landscape, config, rng);
}

BbhtTrace run_bbht(const ObjectiveLandscape& landscape, std::int64_t y_target, double lambda, Rng& rng,
                   std::uint64_t max_queries)
{
    if (lambda < 1.0) throw ParameterError("lambda must be at least 1");
    const std::uint64_t t = landscape.count_below(y_target);
    const double cap = std::sqrt(static_cast<double>(landscape.size()));
    BbhtTrace trace;
    double k = 1.0;
    while (trace.classical_queries < max_queries) {
        const std::uint64_t L = draw_rotations(k, rng);
        const Measurement m = sample_with_count(landscape, t, L, rng);
        trace.classical_queries += 1;
        trace.quantum_queries += L;
        if (m.good) {
            trace.found = m.assignment;
            trace.found_value = m.value;
            return trace;
        }
        k = std::min(lambda * k, cap);
        trace.max_k = std::max(trace.max_k, k);
    }
    throw ExhaustionError("BBHT exhausted " + std::to_string(max_queries) + " measurements without a target hit");
}

ClassicalSearchSpace::ClassicalSearchSpace(const QuboProblem& qubo, const CodeParams& params, std::uint64_t max_size)
{
    const int choose = params.M - 1;
    if (choose > qubo.q1) throw ParameterError("M - 1 exceeds the number of candidate rows");
    const std::int64_t total = binomial(qubo.q1, choose);
    if (static_cast<std::uint64_t>(total) > max_size)
        throw ResourceError("binomial(q1, M-1) = " + std::to_string(total) + " exceeds the classical search guard");
    masks_.reserve(static_cast<std::size_t>(total));
    values_.reserve(static_cast<std::size_t>(total));
    if (choose == 0) {
        masks_.push_back(0);
    } else {
        // Gosper's hack walks every q1-bit mask of the given popcount in increasing order.
        Assignment x = (Assignment{1} << choose) - 1;
        const Assignment limit = Assignment{1} << qubo.q1;
        while (x < limit) {
            masks_.push_back(x);
            const Assignment low = x & (~x + 1);
            const Assignment ripple = x + low;
            x = (((ripple ^ x) >> 2) / low) | ripple;
        }
    }
    for (Assignment m : masks_) values_.push_back(evaluate(qubo, m));
    min_value_ = *std::min_element(values_.begin(), values_.end());
}

GasTrace run_classical_exhaustive(const ClassicalSearchSpace& space, Rng& rng, bool record_iterations)
{
    // Partial Fisher-Yates over a reused index table, restored afterwards so every
    // trial starts from the identity order.
    thread_local std::vector<std::uint32_t> order;
    thread_local std::vector<std::pair<std::uint32_t, std::uint32_t>> swaps;
    const auto n = static_cast<std::uint32_t>(space.size());
    if (order.size() != n) {
        order.resize(n);
        for (std::uint32_t i = 0; i < n; ++i) order[i] = i;
    }
    swaps.clear();

    GasTrace trace;
    trace.thresholds.push_back(std::numeric_limits<std::int64_t>::max());
    const std::int64_t target = space.min_value();
    for (std::uint32_t i = 0; i < n; ++i) {
        const auto j = std::uniform_int_distribution<std::uint32_t>(i, n - 1)(rng);
        std::swap(order[i], order[j]);
        swaps.emplace_back(i, j);
        const std::uint32_t pick = order[i];
        const std::int64_t value = space.values()[pick];
        trace.classical_queries += 1;
        note_value(trace, space.masks()[pick], value);
        const bool improved = value < trace.thresholds.back();
        if (record_iterations) trace.iterations.push_back({0, space.masks()[pick], value, trace.thresholds.back(), improved});
        if (improved) trace.thresholds.push_back(value);
        if (value == target) {
            trace.reached_target = true;
            trace.classical_to_target = trace.classical_queries;
            break;
        }
    }
    for (auto it = swaps.rbegin(); it != swaps.rend(); ++it) std::swap(order[it->first], order[it->second]);
    trace.thresholds.erase(trace.thresholds.begin());
    return trace;
}

GasTrace run_classical_exhaustive(const BitMatrix& Pprime, const CodeParams& params, const QuboProblem& qubo,
                                  std::uint64_t seed)
{
    if (static_cast<int>(Pprime.rows.size()) != qubo.q1) throw ParameterError("P' row count differs from q1");
    const ClassicalSearchSpace space(qubo, params);
    Rng rng = trial_rng(seed, 0);
    return run_classical_exhaustive(space, rng);
}

std::uint64_t queries_to_target(const GasTrace& trace, QueryDomain domain) noexcept
{
    if (domain == QueryDomain::Classical)
        return trace.reached_target ? trace.classical_to_target : trace.classical_queries;
    return trace.reached_target ? trace.quantum_to_target : trace.quantum_queries;
}

std::vector<CurvePoint> average_best_curve(std::span<const GasTrace> traces, QueryDomain domain)
{
    struct Event {
        std::uint64_t query;
        std::size_t trace;
        std::int64_t value;
    };
    std::vector<Event> events;
    for (std::size_t i = 0; i < traces.size(); ++i)
        for (const BestPoint& p : traces[i].best_by_query)
            events.push_back({domain == QueryDomain::Classical ? p.classical : p.quantum, i, p.value});
    std::stable_sort(events.begin(), events.end(), [](const Event& a, const Event& b) { return a.query < b.query; });

    std::vector<std::int64_t> current(traces.size());
    std::vector<bool> active(traces.size(), false);
    long double sum = 0;
    std::size_t count = 0;
    std::vector<CurvePoint> curve;
    for (std::size_t e = 0; e < events.size();) {
        const std::uint64_t q = events[e].query;
        for (; e < events.size() && events[e].query == q; ++e) {
            const Event& ev = events[e];
            if (active[ev.trace]) {
                sum -= current[ev.trace];
            } else {
                active[ev.trace] = true;
                ++count;
            }
            current[ev.trace] = ev.value;
            sum += ev.value;
        }
        curve.push_back({q, static_cast<double>(sum / static_cast<long double>(count))});
    }
    return curve;
}

std::vector<CdfPoint> queries_cdf(std::span<const GasTrace> traces, QueryDomain domain)
{
    std::map<std::uint64_t, std::size_t> histogram;
    for (const GasTrace& t : traces) ++histogram[queries_to_target(t, domain)];
    std::vector<CdfPoint> cdf;
    std::size_t running = 0;
    for (const auto& [q, n] : histogram) {
        running += n;
        cdf.push_back({q, static_cast<double>(running) / static_cast<double>(traces.size())});
    }
    return cdf;
}

unsigned default_workers() noexcept { return std::max(1U, std::thread::hardware_concurrency()); }

std::string trace_to_json(const GasTrace& trace)
{
    nlohmann::ordered_json j;
    j["classical_queries"] = trace.classical_queries;
    j["quantum_queries"] = trace.quantum_queries;
    j["reached_target"] = trace.reached_target;
    j["classical_to_target"] = trace.classical_to_target;
    j["quantum_to_target"] = trace.quantum_to_target;
    if (trace.has_best) {
        j["best_value"] = trace.best_value;
        j["best_assignment"] = trace.best_assignment;
    }
    j["thresholds"] = trace.thresholds;
    auto its = nlohmann::json::array();
    for (const auto& it : trace.iterations)
        its.push_back({{"L", it.rotations}, {"y", it.threshold}, {"x", it.assignment}, {"value", it.value},
                       {"improved", it.improved}});
    j["iterations"] = std::move(its);
    return j.dump(1) + "\n";
}

} // namespace cwc
