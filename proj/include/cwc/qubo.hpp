#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cwc/code_core.hpp"

namespace cwc {

/// Which penalty the objective uses: rho' = f'_bar + 1 or rho'' = E'_min_bar + 1.
enum class Variant { EPrime, EDoublePrime };

std::string_view to_string(Variant v) noexcept;
Variant parse_variant(std::string_view text);

/// Integer QUBO E(x) = x^T Q x + constant over q1 binary variables.
///
/// Q is stored as a dense q1 x q1 row-major array whose strictly lower triangle
/// is zero; the diagonal carries the linear coefficients.
struct QuboProblem {
    int q1 = 0;
    std::vector<std::int64_t> Q;
    std::int64_t constant = 0;
    int l = 1;
    std::int64_t rho = 0;
    int q2 = 1;
    Variant variant = Variant::EDoublePrime;

    std::int64_t coeff(int r, int c) const noexcept { return Q[static_cast<std::size_t>(r) * q1 + c]; }
    std::int64_t& coeff(int r, int c) noexcept { return Q[static_cast<std::size_t>(r) * q1 + c]; }

    friend bool operator==(const QuboProblem&, const QuboProblem&) = default;
};

/// Bounds that fix the penalty, the initial threshold and the register width.
struct BoundsReport {
    std::int64_t f_bar = 0;     ///< upper bound of the pairwise cost f'
    std::int64_t g_bar = 0;     ///< maximum of the cardinality penalty g'
    std::int64_t rho = 0;       ///< penalty used by the requested variant
    std::int64_t e_max_bar = 0; ///< upper bound of the objective maximum
    std::int64_t e_min_bar = 0; ///< upper bound of the objective minimum over valid codes
    std::int64_t y0 = 0;        ///< e_min_bar + 1
    int q2 = 0;                 ///< ceil(log2 e_max_bar) + 1
};

/// Smallest l with binomial(M,2) (2w-d)^l < (2w-d+2)^l, evaluated in exact integers.
int exponent_l(const CodeParams& params);

BoundsReport compute_bounds(const CodeParams& params, int q1, int l, Variant variant);

/// Full construction: l and rho from the bounds, then the coefficients.
QuboProblem build_objective(const BitMatrix& Pprime, const CodeParams& params, Variant variant);

/// Coefficient assembly with explicit l, rho and q2.
QuboProblem assemble_qubo(const BitMatrix& Pprime, const CodeParams& params, int l, std::int64_t rho, int q2,
                          Variant variant);

std::int64_t evaluate(const QuboProblem& qubo, Assignment x);

/// Pairwise cost f'(x) = sum over selected pairs of <p_r, p_r'>^l.
std::int64_t pair_cost(const BitMatrix& Pprime, int l, Assignment x);

/// "text": header line plus the full q1 x q1 matrix; "json": same content as an object.
std::string export_qubo(const QuboProblem& qubo, std::string_view format = "text");
QuboProblem import_qubo(std::string_view text);

struct CellMismatch {
    int row = 0;
    int col = 0; ///< -1 for header fields
    std::int64_t expected = 0;
    std::int64_t actual = 0;
    std::string field;
};

/// First divergence between two problems: q1, then Q row-major, then the remaining header fields.
std::optional<CellMismatch> first_mismatch(const QuboProblem& expected, const QuboProblem& actual);

} // namespace cwc
