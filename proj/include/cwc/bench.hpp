#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "cwc/bounds.hpp"
#include "cwc/code_core.hpp"
#include "cwc/engine.hpp"
#include "cwc/qubo.hpp"

namespace cwc {

/// Everything derived from (n, w, d, M) before any search runs.
struct Instance {
    CodeParams params;
    bool degenerate = false;
    BitMatrix P;
    BitMatrix Pprime;
    int l = 0;
    BoundsReport bounds_prime;
    BoundsReport bounds_double;
    QuboProblem qubo_prime;
    QuboProblem qubo_double;
    std::optional<std::int64_t> a_prev;   ///< A(n-1, d, w), table or override
    std::optional<std::uint64_t> t_low;   ///< set when the solution-count bound applies
    std::string t_low_note;               ///< why it does not, otherwise
    double k_cap = 1.0;                   ///< rotation cap for the proposed GAS
    std::optional<KoptResult> kopt;
};

Instance formulate_instance(const CodeParams& params, std::optional<std::int64_t> a_prev_override = std::nullopt);

nlohmann::ordered_json bounds_json(const Instance& inst);

/// Writes pprime.txt, qubo_E-prime.txt, qubo_E-double-prime.txt and bounds.json.
void cmd_formulate(const Instance& inst, const std::filesystem::path& out_dir);

struct RunSpec {
    CodeParams params;
    std::vector<EngineVariant> variants{EngineVariant::ClassicalExhaustive, EngineVariant::GasConventional,
                                        EngineVariant::GasProposed};
    std::uint64_t trials = 10'000;
    std::uint64_t seed = 1;
    std::optional<double> lambda;
    std::optional<std::int64_t> a_prev;
    std::filesystem::path out_dir;
    bool write_files = true;
    unsigned workers = default_workers();
};

struct VariantStats {
    EngineVariant variant{};
    std::uint64_t trials = 0;
    std::uint64_t reached = 0;
    double mean_classical = 0, median_classical = 0;
    double mean_quantum = 0, median_quantum = 0;
    std::uint64_t max_classical = 0, max_quantum = 0;
};

struct BenchResult {
    std::vector<VariantStats> stats;
    std::vector<std::vector<GasTrace>> traces; ///< parallel to stats
    nlohmann::ordered_json summary;

    const VariantStats* find(EngineVariant v) const noexcept;
    const std::vector<GasTrace>* traces_of(EngineVariant v) const noexcept;
};

VariantStats summarise(EngineVariant variant, std::span<const GasTrace> traces);

/// Runs `trials` independent traces per variant; writes curves, CDFs and summary.json.
BenchResult cmd_bench(const RunSpec& spec);

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool passed() const noexcept;
};

/// Compare a built problem with a golden text export; names the first divergent cell.
CheckResult check_qubo_golden(const QuboProblem& built, std::string_view golden_text);

/// Golden facts of the (7, 3, 4, 7) worked example.
VerifyReport cmd_verify(const std::filesystem::path& golden_dir);

/// Gate counts (formula and compiled) plus the compiled list for the E'' problem at y0.
nlohmann::ordered_json cmd_circuit(const Instance& inst, const std::filesystem::path& out_dir);

std::filesystem::path default_golden_dir();

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

} // namespace cwc
