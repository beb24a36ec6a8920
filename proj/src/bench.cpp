#include "cwc/bench.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "cwc/circuit.hpp"
#include "cwc/errors.hpp"
#include "cwc/landscape.hpp"

#ifndef CWC_GOLDEN_DIR
#define CWC_GOLDEN_DIR "golden"
#endif

namespace cwc {

std::filesystem::path default_golden_dir()
{
    if (const char* env = std::getenv("CWC_GAS_GOLDEN_DIR")) return env;
    return CWC_GOLDEN_DIR;
}

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParameterError("cannot open " + path.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::filesystem::path& path, std::string_view content)
{
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
}

Instance formulate_instance(const CodeParams& params, std::optional<std::int64_t> a_prev_override)
{
    Instance inst;
    inst.params = params;
    inst.P = build_combinatorial_matrix(params.n, params.w);
    inst.Pprime = reduce_matrix(inst.P, params);
    if (params.degenerate()) {
        inst.degenerate = true;
        return inst;
    }
    const int q1 = static_cast<int>(inst.Pprime.rows.size());
    if (q1 == 0) throw ParameterError("no candidate rows remain after fixing p0; M >= 2 is infeasible");
    if (q1 > 62) throw ResourceError("q1 = " + std::to_string(q1) + " exceeds the 62-variable limit");

    inst.l = exponent_l(params);
    inst.bounds_prime = compute_bounds(params, q1, inst.l, Variant::EPrime);
    inst.bounds_double = compute_bounds(params, q1, inst.l, Variant::EDoublePrime);
    inst.qubo_prime = assemble_qubo(inst.Pprime, params, inst.l, inst.bounds_prime.rho, inst.bounds_prime.q2,
                                    Variant::EPrime);
    inst.qubo_double = assemble_qubo(inst.Pprime, params, inst.l, inst.bounds_double.rho, inst.bounds_double.q2,
                                     Variant::EDoublePrime);

    inst.a_prev = a_prev_override ? a_prev_override : known_A(params.n - 1, params.d, params.w);
    if (!inst.a_prev) {
        inst.t_low_note = "A(n-1, d, w) unknown; pass --a-prev to enable the solution-count bound";
    } else {
        try {
            inst.t_low = t_lower(params, *inst.a_prev);
        } catch (const InapplicableBoundError& e) {
            inst.t_low_note = e.what();
        }
    }
    if (inst.t_low && *inst.t_low <= (std::uint64_t{1} << q1)) {
        inst.kopt = k_opt(*inst.t_low, q1);
        inst.k_cap = inst.kopt->k_opt;
    } else {
        inst.k_cap = std::sqrt(std::ldexp(1.0, q1));
    }
    return inst;
}

namespace {

nlohmann::ordered_json bounds_to_json(const BoundsReport& b)
{
    nlohmann::ordered_json j;
    j["f_bar"] = b.f_bar;
    j["g_bar"] = b.g_bar;
    j["rho"] = b.rho;
    j["E_max_bar"] = b.e_max_bar;
    j["E_min_bar"] = b.e_min_bar;
    j["y0"] = b.y0;
    j["q2"] = b.q2;
    return j;
}

nlohmann::ordered_json params_json(const CodeParams& p)
{
    return {{"n", p.n}, {"w", p.w}, {"d", p.d}, {"M", p.M}};
}

} // namespace

nlohmann::ordered_json bounds_json(const Instance& inst)
{
    nlohmann::ordered_json j;
    j["params"] = params_json(inst.params);
    j["degenerate"] = inst.degenerate;
    if (inst.degenerate) {
        const int closed_form = inst.params.n / inst.params.w;
        j["closed_form_max_codewords"] = closed_form;
        j["feasible"] = inst.params.M <= closed_form;
        j["note"] = "d = 2w: codewords must have disjoint supports; no QUBO is formulated";
        j["code"] = nlohmann::json::array();
        for (BitRow r : degenerate_code(inst.params).rows) j["code"].push_back(format_row(r, inst.params.n));
        return j;
    }
    j["q1"] = static_cast<int>(inst.Pprime.rows.size());
    j["q1_closed_form"] = reduced_row_count(inst.params);
    j["l"] = inst.l;
    j["E_prime"] = bounds_to_json(inst.bounds_prime);
    j["E_double_prime"] = bounds_to_json(inst.bounds_double);
    j["y0"] = inst.bounds_double.y0;
    j["q2_prime"] = inst.bounds_prime.q2;
    j["q2_double_prime"] = inst.bounds_double.q2;
    if (inst.a_prev) j["A_n_minus_1"] = *inst.a_prev;
    else j["A_n_minus_1"] = nullptr;
    if (inst.t_low) {
        j["t_low"] = *inst.t_low;
        j["k_opt_upper"] = k_opt_upper(*inst.t_low, static_cast<int>(inst.Pprime.rows.size()));
    } else {
        j["t_low"] = nullptr;
        j["t_low_note"] = inst.t_low_note;
    }
    if (inst.kopt) {
        nlohmann::ordered_json k;
        k["k_opt"] = inst.kopt->k_opt;
        k["interval"] = {inst.kopt->lo, inst.kopt->hi};
        k["extrema"] = inst.kopt->extrema;
        k["ratio_not_small"] = inst.kopt->ratio_not_small;
        j["k_opt"] = std::move(k);
    }
    j["k_cap"] = inst.k_cap;
    return j;
}

void cmd_formulate(const Instance& inst, const std::filesystem::path& out_dir)
{
    write_file(out_dir / "bounds.json", bounds_json(inst).dump(2) + "\n");
    if (inst.degenerate) return;
    write_file(out_dir / "pprime.txt", serialize(inst.Pprime));
    write_file(out_dir / "qubo_E-prime.txt", export_qubo(inst.qubo_prime));
    write_file(out_dir / "qubo_E-double-prime.txt", export_qubo(inst.qubo_double));
}

const VariantStats* BenchResult::find(EngineVariant v) const noexcept
{
    for (const auto& s : stats)
        if (s.variant == v) return &s;
    return nullptr;
}

const std::vector<GasTrace>* BenchResult::traces_of(EngineVariant v) const noexcept
{
    for (std::size_t i = 0; i < stats.size(); ++i)
        if (stats[i].variant == v) return &traces[i];
    return nullptr;
}

namespace {

double median_of(std::vector<std::uint64_t> v)
{
    if (v.empty()) return 0.0;
    std::sort(v.begin(), v.end());
    const std::size_t mid = v.size() / 2;
    return v.size() % 2 ? static_cast<double>(v[mid]) : 0.5 * static_cast<double>(v[mid - 1] + v[mid]);
}

double mean_of(const std::vector<std::uint64_t>& v)
{
    if (v.empty()) return 0.0;
    long double s = 0;
    for (auto x : v) s += x;
    return static_cast<double>(s / static_cast<long double>(v.size()));
}

std::string curve_csv(const std::vector<CurvePoint>& curve)
{
    std::ostringstream os;
    os.precision(17);
    os << "query_index,value\n";
    for (const auto& p : curve) os << p.query << ',' << p.value << '\n';
    return os.str();
}

std::string cdf_csv(const std::vector<CdfPoint>& cdf)
{
    std::ostringstream os;
    os.precision(17);
    os << "queries,cdf\n";
    for (const auto& p : cdf) os << p.queries << ',' << p.cdf << '\n';
    return os.str();
}

std::uint64_t variant_salt(EngineVariant v)
{
    switch (v) {
    case EngineVariant::ClassicalExhaustive: return 0x636c617373696361ULL;
    case EngineVariant::GasConventional: return 0x636f6e76656e7469ULL;
    case EngineVariant::GasProposed: return 0x70726f706f736564ULL;
    case EngineVariant::Bbht: return 0x6262687462626874ULL;
    }
    return 0;
}

} // namespace

VariantStats summarise(EngineVariant variant, std::span<const GasTrace> traces)
{
    VariantStats s;
    s.variant = variant;
    s.trials = traces.size();
    std::vector<std::uint64_t> cq, qq;
    for (const GasTrace& t : traces) {
        s.reached += t.reached_target;
        cq.push_back(queries_to_target(t, QueryDomain::Classical));
        qq.push_back(queries_to_target(t, QueryDomain::Quantum));
    }
    s.mean_classical = mean_of(cq);
    s.mean_quantum = mean_of(qq);
    s.median_classical = median_of(cq);
    s.median_quantum = median_of(qq);
    s.max_classical = cq.empty() ? 0 : *std::max_element(cq.begin(), cq.end());
    s.max_quantum = qq.empty() ? 0 : *std::max_element(qq.begin(), qq.end());
    return s;
}

BenchResult cmd_bench(const RunSpec& spec)
{
    if (spec.trials < 1) throw ParameterError("trials must be at least 1");
    const Instance inst = formulate_instance(spec.params, spec.a_prev);
    if (inst.degenerate) throw ParameterError("d = 2w has a closed-form answer; nothing to benchmark");
    const int q1 = static_cast<int>(inst.Pprime.rows.size());

    auto wants = [&](EngineVariant v) {
        return std::find(spec.variants.begin(), spec.variants.end(), v) != spec.variants.end();
    };
    if (wants(EngineVariant::Bbht)) throw ParameterError("bbht is a library routine; bench runs GAS and classical");

    std::optional<ObjectiveLandscape> land_prime, land_double;
    if (wants(EngineVariant::GasConventional)) land_prime = build_landscape(inst.qubo_prime);
    if (wants(EngineVariant::GasProposed)) land_double = build_landscape(inst.qubo_double);

    BenchResult result;
    for (EngineVariant v : spec.variants) {
        const std::uint64_t master = spec.seed ^ variant_salt(v);
        std::vector<GasTrace> traces;
        if (v == EngineVariant::ClassicalExhaustive) {
            const ClassicalSearchSpace space(inst.qubo_prime, spec.params);
            traces = run_trials<GasTrace>(
                spec.trials,
                [&](std::uint64_t i) {
                    Rng rng = trial_rng(master, i);
                    return run_classical_exhaustive(space, rng);
                },
                spec.workers);
        } else {
            EngineConfig config = v == EngineVariant::GasConventional
                                      ? conventional_gas_config(q1, master)
                                      : proposed_gas_config(inst.bounds_double.y0, inst.k_cap, master);
            if (spec.lambda) config.lambda = *spec.lambda;
            const ObjectiveLandscape& land = v == EngineVariant::GasConventional ? *land_prime : *land_double;
            traces = run_trials<GasTrace>(
                spec.trials,
                [&](std::uint64_t i) {
                    Rng rng = trial_rng(master, i);
                    return run_gas(land, config, rng);
                },
                spec.workers);
        }
        result.stats.push_back(summarise(v, traces));
        result.traces.push_back(std::move(traces));
    }

    nlohmann::ordered_json summary;
    summary["params"] = params_json(spec.params);
    summary["trials"] = spec.trials;
    summary["seed"] = spec.seed;
    summary["metric"] = "queries-to-optimum per trial; classical = number of measurements, quantum = sum of "
                        "rotation counts L_i; reduction = 1 - mean(gas-proposed) / mean(gas-conventional)";
    summary["objectives"] = {{"classical-exhaustive", "E-prime"},
                             {"gas-conventional", "E-prime"},
                             {"gas-proposed", "E-double-prime"}};
    summary["y0_proposed"] = inst.bounds_double.y0;
    summary["k_cap_proposed"] = inst.k_cap;
    if (land_double) summary["min_value"] = land_double->min_value();
    else if (land_prime) summary["min_value"] = land_prime->min_value();
    auto& variants = summary["variants"];
    for (const auto& s : result.stats) {
        variants[std::string(to_string(s.variant))] = {
            {"trials", s.trials},           {"reached", s.reached},
            {"mean_classical", s.mean_classical}, {"median_classical", s.median_classical},
            {"max_classical", s.max_classical},   {"mean_quantum", s.mean_quantum},
            {"median_quantum", s.median_quantum}, {"max_quantum", s.max_quantum}};
    }
    const VariantStats* conv = result.find(EngineVariant::GasConventional);
    const VariantStats* prop = result.find(EngineVariant::GasProposed);
    if (conv && prop) {
        auto reduction = [](double p, double c) { return c > 0 ? 1.0 - p / c : 0.0; };
        summary["reduction"] = {
            {"classical_mean", reduction(prop->mean_classical, conv->mean_classical)},
            {"quantum_mean", reduction(prop->mean_quantum, conv->mean_quantum)},
            {"classical_median", reduction(prop->median_classical, conv->median_classical)},
            {"quantum_median", reduction(prop->median_quantum, conv->median_quantum)}};
    }
    result.summary = summary;

    if (spec.write_files) {
        for (std::size_t i = 0; i < result.stats.size(); ++i) {
            const std::string name(to_string(result.stats[i].variant));
            const auto& tr = result.traces[i];
            write_file(spec.out_dir / ("avg_classical_" + name + ".csv"),
                       curve_csv(average_best_curve(tr, QueryDomain::Classical)));
            write_file(spec.out_dir / ("cdf_classical_" + name + ".csv"), cdf_csv(queries_cdf(tr, QueryDomain::Classical)));
            if (result.stats[i].variant != EngineVariant::ClassicalExhaustive) {
                write_file(spec.out_dir / ("avg_quantum_" + name + ".csv"),
                           curve_csv(average_best_curve(tr, QueryDomain::Quantum)));
                write_file(spec.out_dir / ("cdf_quantum_" + name + ".csv"), cdf_csv(queries_cdf(tr, QueryDomain::Quantum)));
            }
        }
        write_file(spec.out_dir / "summary.json", summary.dump(2) + "\n");
    }
    return result;
}

bool VerifyReport::passed() const noexcept
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

CheckResult check_qubo_golden(const QuboProblem& built, std::string_view golden_text)
{
    CheckResult c{"qubo-golden", false, ""};
    const QuboProblem golden = import_qubo(golden_text);
    if (const auto m = first_mismatch(golden, built)) {
        std::ostringstream os;
        if (m->col >= 0)
            os << "Q[" << m->row << "][" << m->col << "] expected " << m->expected << " got " << m->actual;
        else
            os << m->field << " expected " << m->expected << " got " << m->actual;
        c.detail = os.str();
        return c;
    }
    c.passed = true;
    c.detail = "22x22 matrix, constant, l, rho, q2 match";
    return c;
}

VerifyReport cmd_verify(const std::filesystem::path& golden_dir)
{
    VerifyReport rep;
    const CodeParams params = CodeParams::make(7, 3, 4, 7);
    const Instance inst = formulate_instance(params);

    rep.checks.push_back(check_qubo_golden(inst.qubo_double, read_file(golden_dir / "q_7_3_4_7.txt")));

    {
        CheckResult c{"register-widths", false, ""};
        std::ostringstream os;
        os << "q1=" << inst.qubo_double.q1 << " q2''=" << inst.bounds_double.q2 << " q2'=" << inst.bounds_prime.q2;
        c.detail = os.str();
        c.passed = inst.qubo_double.q1 == 22 && inst.bounds_double.q2 == 15 && inst.bounds_prime.q2 == 22;
        rep.checks.push_back(c);
    }
    {
        CheckResult c{"pprime-golden", false, ""};
        const BitMatrix golden = deserialize_bit_matrix(read_file(golden_dir / "pprime_7_3_4.txt"));
        c.passed = golden == inst.Pprime;
        for (std::size_t r = 0; !c.passed && r < std::min(golden.size(), inst.Pprime.size()); ++r)
            if (golden.rows[r] != inst.Pprime.rows[r]) {
                c.detail = "row " + std::to_string(r) + " expected " + format_row(golden.rows[r], 7) + " got " +
                           format_row(inst.Pprime.rows[r], 7);
                break;
            }
        if (c.passed) c.detail = "22 rows match";
        else if (c.detail.empty()) c.detail = "row counts differ";
        rep.checks.push_back(c);
    }

    const ObjectiveLandscape land = build_landscape(inst.qubo_double);
    rep.checks.push_back({"landscape-minimum", land.min_value() == 15,
                          "min over 2^22 assignments = " + std::to_string(land.min_value())});
    {
        CheckResult c{"x-opt", false, ""};
        const Assignment x = parse_assignment(read_file(golden_dir / "x_opt_7_3_4_7.txt").substr(0, 22));
        const std::int64_t value = evaluate(inst.qubo_double, x);
        const BitMatrix code = decode_solution(x, inst.Pprime, params);
        const BitMatrix c_opt = deserialize_bit_matrix(read_file(golden_dir / "c_opt_7_3_4_7.txt"));
        const ValidationReport v = validate_code(code, params);
        c.passed = value == 15 && v.valid && code == c_opt;
        c.detail = "E''(x_opt)=" + std::to_string(value) + ", decoded code " + (code == c_opt ? "matches" : "differs from") +
                   " C_opt, " + v.message;
        rep.checks.push_back(c);
    }
    {
        CheckResult c{"solution-count", false, ""};
        const std::uint64_t t = land.count_below(inst.bounds_double.y0);
        const std::uint64_t tl = inst.t_low.value_or(0);
        c.passed = inst.bounds_double.y0 == 16 && tl == 6 && t >= tl;
        c.detail = "count below y0=" + std::to_string(inst.bounds_double.y0) + " is " + std::to_string(t) +
                   ", lower bound " + std::to_string(tl);
        rep.checks.push_back(c);
    }
    return rep;
}

nlohmann::ordered_json cmd_circuit(const Instance& inst, const std::filesystem::path& out_dir)
{
    if (inst.degenerate) throw ParameterError("d = 2w has no QUBO circuit");
    const GateList gates = compile_state_prep(inst.qubo_double, inst.bounds_double.y0);
    const GateCounts formula = gate_counts(gates.q1, gates.q2);
    const GateCounts compiled = tally(gates);
    auto counts = [](const GateCounts& g) {
        return nlohmann::ordered_json{{"H", g.h}, {"R", g.r}, {"1-CR", g.cr1}, {"2-CR", g.cr2}, {"IQFT", g.iqft}};
    };
    nlohmann::ordered_json j;
    j["params"] = params_json(inst.params);
    j["q1"] = gates.q1;
    j["q2"] = gates.q2;
    j["y"] = inst.bounds_double.y0;
    j["formula"] = counts(formula);
    j["compiled"] = counts(compiled);
    j["match"] = formula == compiled;
    if (!out_dir.empty()) {
        write_file(out_dir / "gate_counts.json", j.dump(2) + "\n");
        write_file(out_dir / "gates.json", to_json(gates));
    }
    return j;
}

} // namespace cwc
