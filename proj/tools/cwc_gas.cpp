// cwc-gas: formulate constant-weight-code searches as QUBOs and benchmark Grover adaptive search.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "cwc/bench.hpp"
#include "cwc/circuit.hpp"
#include "cwc/errors.hpp"

namespace {

enum ExitCode : int {
    kOk = 0,
    kFailure = 1,
    kParameterError = 2,
    kResourceGuard = 3,
    kGoldenMismatch = 4,
};

struct CommonOptions {
    int n = 7;
    int w = 3;
    int d = 4;
    int m = 7;
    std::optional<std::int64_t> a_prev;
    std::string out = "out";

    cwc::CodeParams params() const { return cwc::CodeParams::make(n, w, d, m); }
};

void add_common(CLI::App* cmd, CommonOptions& o)
{
    cmd->add_option("--n", o.n, "codeword length")->capture_default_str();
    cmd->add_option("--w", o.w, "codeword weight")->capture_default_str();
    cmd->add_option("--d", o.d, "minimum distance (even)")->capture_default_str();
    cmd->add_option("--m", o.m, "number of codewords")->capture_default_str();
    cmd->add_option("--a-prev", o.a_prev, "override A(n-1, d, w) for the solution-count bound");
    cmd->add_option("--out", o.out, "output directory")->capture_default_str();
}

std::vector<cwc::EngineVariant> parse_variants(const std::vector<std::string>& names)
{
    std::vector<cwc::EngineVariant> out;
    for (const auto& list : names) {
        std::stringstream ss(list);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) out.push_back(cwc::parse_engine_variant(item));
    }
    return out;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Grover adaptive search for binary constant weight codes"};
    app.require_subcommand(1);

    CommonOptions formulate_opts;
    bool emit_pprime = false;
    auto* formulate = app.add_subcommand("formulate", "write P', both QUBOs and the bounds report");
    add_common(formulate, formulate_opts);
    formulate->add_flag("--emit-pprime", emit_pprime, "also print P' to stdout");

    CommonOptions bench_opts;
    std::vector<std::string> variant_names;
    std::uint64_t trials = 10'000;
    std::uint64_t seed = 1;
    std::optional<double> lambda;
    unsigned workers = cwc::default_workers();
    auto* bench = app.add_subcommand("bench", "run repeated searches and emit curves, CDFs and a summary");
    add_common(bench, bench_opts);
    bench->add_option("--variant", variant_names,
                      "classical-exhaustive, gas-conventional, gas-proposed (comma separated; default all)");
    bench->add_option("--trials", trials, "independent trials per variant")->capture_default_str();
    bench->add_option("--seed", seed, "master seed")->capture_default_str();
    bench->add_option("--lambda", lambda, "override the k growth factor of both GAS variants");
    bench->add_option("--workers", workers, "worker threads")->capture_default_str();

    std::string golden_dir = cwc::default_golden_dir().string();
    auto* verify = app.add_subcommand("verify", "check the (7,3,4,7) worked example against golden files");
    verify->add_option("--golden", golden_dir, "golden file directory")->capture_default_str();

    CommonOptions circuit_opts;
    std::optional<std::uint64_t> dist_L;
    auto* circuit = app.add_subcommand("circuit", "compile A_y for E'' at y0 and report gate counts");
    add_common(circuit, circuit_opts);
    circuit->add_option("--L", dist_L, "also dump the x distribution after L Grover operators (small widths only)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kParameterError;
    }

    try {
        if (*formulate) {
            const auto inst = cwc::formulate_instance(formulate_opts.params(), formulate_opts.a_prev);
            cwc::cmd_formulate(inst, formulate_opts.out);
            if (emit_pprime) std::cout << cwc::serialize(inst.Pprime);
            std::cerr << cwc::bounds_json(inst).dump(2) << '\n';
            return kOk;
        }
        if (*bench) {
            cwc::RunSpec spec;
            spec.params = bench_opts.params();
            if (!variant_names.empty()) spec.variants = parse_variants(variant_names);
            spec.trials = trials;
            spec.seed = seed;
            spec.lambda = lambda;
            spec.a_prev = bench_opts.a_prev;
            spec.out_dir = bench_opts.out;
            spec.workers = workers;
            const auto result = cwc::cmd_bench(spec);
            std::cout << result.summary.dump(2) << '\n';
            return kOk;
        }
        if (*verify) {
            const auto report = cwc::cmd_verify(golden_dir);
            for (const auto& c : report.checks)
                std::cout << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << ": " << c.detail << '\n';
            return report.passed() ? kOk : kGoldenMismatch;
        }
        if (*circuit) {
            const auto inst = cwc::formulate_instance(circuit_opts.params(), circuit_opts.a_prev);
            auto j = cwc::cmd_circuit(inst, circuit_opts.out);
            if (dist_L) {
                const auto px = cwc::grover_iterate(inst.qubo_double, inst.bounds_double.y0, *dist_L);
                std::ostringstream csv;
                csv.precision(17);
                csv << "assignment,probability\n";
                for (std::size_t x = 0; x < px.size(); ++x) csv << x << ',' << px[x] << '\n';
                cwc::write_file(std::filesystem::path(circuit_opts.out) / "distribution.csv", csv.str());
            }
            std::cout << j.dump(2) << '\n';
            return j["match"].get<bool>() ? kOk : kFailure;
        }
    } catch (const cwc::ParameterError& e) {
        std::cerr << "parameter error: " << e.what() << '\n';
        return kParameterError;
    } catch (const cwc::ResourceError& e) {
        std::cerr << "resource guard: " << e.what() << '\n';
        return kResourceGuard;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFailure;
    }
    return kFailure;
}
