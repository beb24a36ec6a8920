// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "cwc/bench.hpp"
#include "cwc/bounds.hpp"
#include "cwc/circuit.hpp"
#include "cwc/engine.hpp"
#include "cwc/landscape.hpp"

using namespace cwc;
using Clock = std::chrono::steady_clock;

namespace {

// Tolerances and budgets.
constexpr double kAc1Seconds = 1.0;
constexpr double kAc2Seconds = 60.0;
constexpr double kAc5Seconds = 10.0;
constexpr double kAc7Seconds = 600.0;
constexpr double kAc5ProbTolerance = 1e-9;
constexpr std::uint64_t kAc7Trials = 10'000;
constexpr double kAc7ClassicalTarget = 0.63;
constexpr double kAc7QuantumTarget = 0.31;
constexpr double kAc7Band = 0.15;
constexpr std::uint64_t kAc8Trials = 100'000;
constexpr std::uint64_t kAc8Low = 40'000;
constexpr std::uint64_t kAc8High = 75'000;
constexpr std::uint64_t kSeed = 20240607;

struct Outcome {
    bool pass = false;
    std::string detail;
};

int failures = 0;

void report(int id, const std::string& name, const std::function<Outcome()>& body)
{
    Outcome o;
    const auto t0 = Clock::now();
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (!o.pass) ++failures;
    std::printf("%s AC%d %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", id, name.c_str(), o.detail.c_str(), secs);
    std::fflush(stdout);
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Example {
    CodeParams params = CodeParams::make(7, 3, 4, 7);
    Instance inst = formulate_instance(params);
    std::optional<ObjectiveLandscape> land;
};

Example& ex()
{
    static Example e;
    return e;
}

QuboProblem toy_qubo(int q1, int q2, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coef(-1, 1);
    QuboProblem q;
    q.q1 = q1;
    q.q2 = q2;
    q.Q.assign(static_cast<std::size_t>(q1) * q1, 0);
    for (int r = 0; r < q1; ++r)
        for (int c = r; c < q1; ++c) q.coeff(r, c) = coef(rng);
    q.constant = coef(rng);
    return q;
}

std::uint64_t quantile(std::vector<std::uint64_t> v, double p)
{
    std::sort(v.begin(), v.end());
    auto idx = static_cast<std::size_t>(std::ceil(p * static_cast<double>(v.size()))) - 1;
    return v[std::min(idx, v.size() - 1)];
}

Outcome ac1()
{
    const auto t0 = Clock::now();
    const CodeParams p = CodeParams::make(7, 3, 4, 7);
    const Instance inst = formulate_instance(p);
    const CheckResult golden = check_qubo_golden(inst.qubo_double, read_file(default_golden_dir() / "q_7_3_4_7.txt"));
    bool diag = true, off = true;
    for (int r = 0; r < 22; ++r) {
        diag = diag && inst.qubo_double.coeff(r, r) == -176;
        for (int c = r + 1; c < 22; ++c) {
            const auto v = inst.qubo_double.coeff(r, c);
            off = off && (v == 32 || v == 33 || v == 64);
        }
    }
    const double secs = seconds_since(t0);
    std::ostringstream os;
    os << golden.detail << "; q1=" << inst.qubo_double.q1 << " q2''=" << inst.qubo_double.q2
       << " q2'=" << inst.qubo_prime.q2 << " constant=" << inst.qubo_double.constant;
    const bool ok = golden.passed && diag && off && inst.qubo_double.q1 == 22 && inst.qubo_double.q2 == 15 &&
                    inst.qubo_prime.q2 == 22 && inst.qubo_double.constant == 576 && secs < kAc1Seconds;
    return {ok, os.str()};
}

Outcome ac2()
{
    const auto t0 = Clock::now();
    auto& e = ex();
    e.land = build_landscape(e.inst.qubo_double);
    const Assignment x = parse_assignment(read_file(default_golden_dir() / "x_opt_7_3_4_7.txt").substr(0, 22));
    const std::int64_t v = evaluate(e.inst.qubo_double, x);
    const BitMatrix code = decode_solution(x, e.inst.Pprime, e.params);
    bool weights = true;
    for (BitRow r : code.rows) weights = weights && weight(r) == 3;
    const int md = min_distance(code);
    const double secs = seconds_since(t0);
    std::ostringstream os;
    os << "min over 2^22 = " << e.land->min_value() << ", E''(x_opt)=" << v << ", decoded " << code.size()
       << " words, min distance " << md;
    return {e.land->min_value() == 15 && v == 15 && code.size() == 7 && md == 4 && weights && secs < kAc2Seconds,
            os.str()};
}

Outcome ac3()
{
    auto& e = ex();
    if (!e.land) e.land = build_landscape(e.inst.qubo_double);
    const std::uint64_t t = e.land->count_below(16);
    std::ostringstream os;
    os << "count(E'' < 16) = " << t << ", bound 3! = 6";
    return {t >= 6 && e.inst.t_low.value_or(0) == 6, os.str()};
}

Outcome ac4()
{
    auto& e = ex();
    if (!e.land) e.land = build_landscape(e.inst.qubo_double);
    std::uint64_t below = 0, below_valid = 0, above_valid = 0;
    const auto values = e.land->values();
    const auto perm = e.land->perm();
    for (std::size_t r = 0; r < values.size(); ++r) {
        const Assignment x = perm[r];
        // codes with fewer than M words fail the row count without decoding
        const bool valid = std::popcount(x) == e.params.M - 1 &&
                           validate_code(decode_solution(x, e.inst.Pprime, e.params), e.params).valid;
        if (values[r] < 16) {
            ++below;
            below_valid += valid;
        } else {
            above_valid += valid;
        }
    }
    std::ostringstream os;
    os << below << " assignments below 16, " << below_valid << " decode to valid codes; " << above_valid
       << " valid codes at or above 16";
    return {below > 0 && below == below_valid && above_valid == 0, os.str()};
}

Outcome ac5()
{
    const auto t0 = Clock::now();
    double worst_prob = 0.0;
    double worst_enc = 0.0;
    int instances = 0;
    for (std::uint64_t seed = 0; instances < 6 && seed < 100; ++seed) {
        const int q1 = 1 + static_cast<int>(seed % 4);
        const int q2 = 6;
        const QuboProblem q = toy_qubo(q1, q2, 900 + seed);
        std::vector<std::int64_t> vals;
        for (Assignment x = 0; x < (Assignment{1} << q1); ++x) vals.push_back(evaluate(q, x));
        const std::int64_t lo = *std::min_element(vals.begin(), vals.end());
        const std::int64_t hi = *std::max_element(vals.begin(), vals.end());
        const std::int64_t y = lo + 1;
        if (y > hi || hi - y >= 32) continue;
        ++instances;
        std::uint64_t t = 0;
        for (auto v : vals) t += v < y;

        const GateList prep = compile_state_prep(q, y);
        StateVector s(prep.width());
        apply(s, prep);
        const auto joint = joint_distribution(s, q1, q2);
        for (Assignment x = 0; x < (Assignment{1} << q1); ++x) {
            const std::int64_t m = std::int64_t{1} << q2;
            const auto v = static_cast<std::uint64_t>(((vals[x] - y) % m + m) % m);
            worst_enc = std::max(worst_enc, std::abs(joint[(x << q2) | v] - std::ldexp(1.0, -q1)));
        }
        for (std::uint64_t L = 0; L <= 20; ++L) {
            const auto px = grover_iterate(q, y, L);
            double good = 0;
            for (std::size_t x = 0; x < px.size(); ++x)
                if (vals[x] < y) good += px[x];
            worst_prob = std::max(worst_prob, std::abs(good - success_prob_L(L, t, std::uint64_t{1} << q1)));
        }
    }
    const double secs = seconds_since(t0);
    std::ostringstream os;
    os << instances << " toy instances, max |P_sim - P_L| = " << worst_prob << ", max encoding error = " << worst_enc;
    return {instances >= 4 && worst_prob < kAc5ProbTolerance && worst_enc < kAc5ProbTolerance && secs < kAc5Seconds,
            os.str()};
}

Outcome ac6()
{
    const GateCounts compiled = tally(compile_state_prep(ex().inst.qubo_double, 16));
    const GateCounts table{37, 15, 330, 3465, 1};
    std::ostringstream os;
    os << "H=" << compiled.h << " R=" << compiled.r << " 1-CR=" << compiled.cr1 << " 2-CR=" << compiled.cr2
       << " IQFT=" << compiled.iqft;
    return {compiled == table && gate_counts(22, 15) == table, os.str()};
}

Outcome ac7()
{
    const auto t0 = Clock::now();
    RunSpec spec;
    spec.params = CodeParams::make(7, 3, 4, 7);
    spec.variants = {EngineVariant::GasConventional, EngineVariant::GasProposed};
    spec.trials = kAc7Trials;
    spec.seed = kSeed;
    spec.write_files = false;
    const BenchResult r = cmd_bench(spec);
    const VariantStats& conv = *r.find(EngineVariant::GasConventional);
    const VariantStats& prop = *r.find(EngineVariant::GasProposed);
    const double red_c = 1.0 - prop.mean_classical / conv.mean_classical;
    const double red_q = 1.0 - prop.mean_quantum / conv.mean_quantum;

    bool dominance = true;
    for (QueryDomain dom : {QueryDomain::Classical, QueryDomain::Quantum}) {
        std::vector<std::uint64_t> c, p;
        for (const auto& t : *r.traces_of(EngineVariant::GasConventional)) c.push_back(queries_to_target(t, dom));
        for (const auto& t : *r.traces_of(EngineVariant::GasProposed)) p.push_back(queries_to_target(t, dom));
        for (int d = 1; d <= 9; ++d) dominance = dominance && quantile(p, d / 10.0) <= quantile(c, d / 10.0);
    }
    const bool reached = conv.reached == kAc7Trials && prop.reached == kAc7Trials;
    const bool c_ok = std::abs(red_c - kAc7ClassicalTarget) <= kAc7Band;
    const bool q_ok = std::abs(red_q - kAc7QuantumTarget) <= kAc7Band;
    const double secs = seconds_since(t0);
    std::ostringstream os;
    os.precision(4);
    os << "mean classical " << conv.mean_classical << " -> " << prop.mean_classical << " (reduction "
       << 100 * red_c << "%, target 63+-15: " << (c_ok ? "ok" : "out of band") << "); mean quantum "
       << conv.mean_quantum << " -> " << prop.mean_quantum << " (reduction " << 100 * red_q
       << "%, target 31+-15: " << (q_ok ? "ok" : "out of band") << "); decile dominance "
       << (dominance ? "holds" : "violated");
    return {reached && c_ok && q_ok && dominance && secs < kAc7Seconds, os.str()};
}

Outcome ac8()
{
    auto& e = ex();
    const ClassicalSearchSpace space(e.inst.qubo_prime, e.params);
    const auto traces = run_trials<std::uint64_t>(kAc8Trials, [&](std::uint64_t i) {
        Rng rng = trial_rng(kSeed ^ 0x636c617373696361ULL, i);
        const GasTrace t = run_classical_exhaustive(space, rng);
        return t.reached_target ? t.classical_to_target : std::uint64_t{0};
    });
    const std::uint64_t worst = *std::max_element(traces.begin(), traces.end());
    const bool all = std::find(traces.begin(), traces.end(), 0) == traces.end();
    std::ostringstream os;
    os << "max queries over " << kAc8Trials << " trials = " << worst << ", window [" << kAc8Low << ", " << kAc8High
       << "], space " << space.size();
    return {all && worst >= kAc8Low && worst <= kAc8High && worst <= space.size(), os.str()};
}

Outcome ac9()
{
    std::vector<std::string> failed;

    // d(a, b) = 2(w - <a, b>), exhaustive n <= 10
    bool thm1 = true;
    for (int n = 1; n <= 10 && thm1; ++n)
        for (int w = 0; w <= n; ++w) {
            const BitMatrix P = build_combinatorial_matrix(n, w);
            for (BitRow a : P.rows)
                for (BitRow b : P.rows) thm1 = thm1 && hamming_distance(a, b) == 2 * (w - inner_product(a, b));
        }
    if (!thm1) failed.push_back("distance-identity");

    // column-permutation closure on decoded codes
    bool closure = true;
    {
        auto& e = ex();
        std::mt19937_64 rng(kSeed);
        std::vector<int> perm(7);
        std::iota(perm.begin(), perm.end(), 0);
        for (int i = 0; i < 5000; ++i) {
            std::shuffle(perm.begin(), perm.end(), rng);
            const Assignment x = rng() & ((Assignment{1} << 22) - 1);
            const BitMatrix code = decode_solution(x, e.inst.Pprime, e.params);
            closure = closure && validate_code(code, e.params).valid ==
                                     validate_code(permute_columns(code, perm), e.params).valid;
        }
        const BitMatrix c_opt = deserialize_bit_matrix(read_file(default_golden_dir() / "c_opt_7_3_4_7.txt"));
        for (int i = 0; i < 500; ++i) {
            std::shuffle(perm.begin(), perm.end(), rng);
            closure = closure && validate_code(permute_columns(c_opt, perm), e.params).valid;
        }
    }
    if (!closure) failed.push_back("permutation-closure");

    // rotation-cap interval containment
    bool thm4 = true;
    for (int q1 = 10; q1 <= 30; ++q1)
        for (std::uint64_t t : {1u, 2u, 6u, 24u, 100u, 1000u}) {
            if (static_cast<double>(t) / std::ldexp(1.0, q1) > 1e-3) continue;
            const double upper = static_cast<double>(k_opt_upper(t, q1));
            const KoptResult wide = k_argmin(t, q1, 1.0, 8.0 * upper);
            thm4 = thm4 && wide.k_opt >= 1.0 && wide.k_opt <= upper;
        }
    if (!thm4) failed.push_back("kopt-interval");

    // P_1(t) = t / N
    bool p1 = true;
    {
        std::mt19937_64 rng(kSeed + 1);
        for (int i = 0; i < 20000; ++i) {
            const std::uint64_t N = 1 + rng() % (std::uint64_t{1} << 20);
            const std::uint64_t t = 1 + rng() % N;
            const double ratio = static_cast<double>(t) / static_cast<double>(N);
            p1 = p1 && std::abs(success_prob_k(1.0, t, N) - ratio) < 1e-12 &&
                 std::abs(success_prob_L(0, t, N) - ratio) < 1e-12;
        }
    }
    if (!p1) failed.push_back("P1-identity");

    // trace determinism
    bool det = true;
    {
        auto& e = ex();
        if (!e.land) e.land = build_landscape(e.inst.qubo_double);
        for (std::uint64_t s = 0; s < 50; ++s) {
            EngineConfig cfg = proposed_gas_config(16, e.inst.k_cap, s);
            cfg.record_iterations = true;
            det = det && run_gas(*e.land, cfg) == run_gas(*e.land, cfg);
            EngineConfig conv = conventional_gas_config(22, s);
            conv.record_iterations = true;
            det = det && run_gas(*e.land, conv) == run_gas(*e.land, conv);
        }
        RunSpec one;
        one.params = e.params;
        one.trials = 3;
        one.seed = 5;
        one.write_files = false;
        det = det && cmd_bench(one).summary.dump() == cmd_bench(one).summary.dump();
    }
    if (!det) failed.push_back("determinism");

    std::string detail = "distance-identity, permutation-closure, kopt-interval, P1-identity, determinism";
    if (!failed.empty()) {
        detail = "failed:";
        for (const auto& f : failed) detail += " " + f;
    }
    return {failed.empty(), detail};
}

} // namespace

int main()
{
    report(1, "golden-qubo", ac1);
    report(2, "landscape-ground-truth", ac2);
    report(3, "solution-count-bound", ac3);
    report(4, "threshold-soundness", ac4);
    report(5, "circuit-model-bridge", ac5);
    report(6, "gate-counts", ac6);
    report(7, "query-complexity", ac7);
    report(8, "classical-baseline", ac8);
    report(9, "property-suites", ac9);
    std::printf("%d of 9 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
