#include "cwc/qubo.hpp"

#include <bit>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

#include "cwc/checked.hpp"
#include "cwc/errors.hpp"

namespace cwc {

std::string_view to_string(Variant v) noexcept
{
    return v == Variant::EPrime ? "E-prime" : "E-double-prime";
}

Variant parse_variant(std::string_view text)
{
    if (text == "E-prime" || text == "E'" || text == "prime") return Variant::EPrime;
    if (text == "E-double-prime" || text == "E''" || text == "double-prime") return Variant::EDoublePrime;
    throw ParameterError("unknown objective variant '" + std::string(text) + "'");
}

int exponent_l(const CodeParams& params)
{
    if (params.degenerate())
        throw DegenerateCaseError("d = 2w: codewords must be disjoint, use the closed form floor(n/w)");
    using boost::multiprecision::cpp_int;
    const cpp_int pairs = binomial(params.M, 2);
    const cpp_int lo = 2 * params.w - params.d;
    const cpp_int hi = lo + 2;
    // floor(log(pairs) / log(hi/lo)) = largest m with hi^m <= pairs * lo^m
    cpp_int hi_pow = 1;
    cpp_int lo_pow = 1;
    int m = 0;
    while (true) {
        hi_pow *= hi;
        lo_pow *= lo;
        if (hi_pow > pairs * lo_pow) break;
        ++m;
    }
    return m + 1;
}

BoundsReport compute_bounds(const CodeParams& params, int q1, int l, Variant variant)
{
    if (q1 <= 0) throw ParameterError("compute_bounds requires q1 > 0");
    BoundsReport b;
    b.f_bar = checked_mul(binomial(q1, 2), checked_pow(params.w - 1, l, "f_bar"), "f_bar");
    const std::int64_t selected = params.M - 1;
    if (2 * selected < q1) {
        const std::int64_t excess = q1 - selected;
        b.g_bar = checked_mul(excess, excess, "g_bar");
    } else {
        b.g_bar = checked_mul(selected, selected, "g_bar");
    }
    b.e_min_bar = checked_mul(binomial(params.M - 1, 2), checked_pow(params.w - params.d / 2, l, "E_min_bar"),
                              "E_min_bar");
    b.y0 = checked_add(b.e_min_bar, 1);
    b.rho = variant == Variant::EPrime ? checked_add(b.f_bar, 1) : b.y0;
    b.e_max_bar = checked_add(b.f_bar, checked_mul(b.rho, b.g_bar, "E_max_bar"), "E_max_bar");
    b.q2 = ceil_log2(std::max<std::int64_t>(b.e_max_bar, 1)) + 1;
    return b;
}

QuboProblem assemble_qubo(const BitMatrix& Pprime, const CodeParams& params, int l, std::int64_t rho, int q2,
                          Variant variant)
{
    const int q1 = static_cast<int>(Pprime.rows.size());
    if (q1 == 0) throw ParameterError("P' is empty: no candidate codewords at this distance");
    if (q1 > 63) throw ResourceError("more than 63 QUBO variables");
    QuboProblem qp;
    qp.q1 = q1;
    qp.Q.assign(static_cast<std::size_t>(q1) * q1, 0);
    qp.l = l;
    qp.rho = rho;
    qp.q2 = q2;
    qp.variant = variant;

    const std::int64_t selected = params.M - 1;
    const std::int64_t pair_penalty = checked_mul(2, rho, "pair penalty");
    const std::int64_t diag = checked_mul(rho, checked_sub(1, checked_mul(2, selected)), "diagonal");
    for (int r = 0; r < q1; ++r) {
        qp.coeff(r, r) = diag;
        for (int c = r + 1; c < q1; ++c) {
            const int ip = inner_product(Pprime.rows[static_cast<std::size_t>(r)], Pprime.rows[static_cast<std::size_t>(c)]);
            qp.coeff(r, c) = checked_add(checked_pow(ip, l, "inner product power"), pair_penalty, "off-diagonal");
        }
    }
    qp.constant = checked_mul(rho, checked_mul(selected, selected), "constant");
    return qp;
}

QuboProblem build_objective(const BitMatrix& Pprime, const CodeParams& params, Variant variant)
{
    const int l = exponent_l(params);
    const BoundsReport b = compute_bounds(params, static_cast<int>(Pprime.rows.size()), l, variant);
    return assemble_qubo(Pprime, params, l, b.rho, b.q2, variant);
}

std::int64_t evaluate(const QuboProblem& qubo, Assignment x)
{
    std::int64_t total = qubo.constant;
    for (Assignment rest = x; rest != 0; rest &= rest - 1) {
        const int r = std::countr_zero(rest);
        const std::int64_t* row = &qubo.Q[static_cast<std::size_t>(r) * qubo.q1];
        for (Assignment cols = rest; cols != 0; cols &= cols - 1) total += row[std::countr_zero(cols)];
    }
    return total;
}

std::int64_t pair_cost(const BitMatrix& Pprime, int l, Assignment x)
{
    std::int64_t total = 0;
    for (Assignment rest = x; rest != 0; rest &= rest - 1) {
        const int r = std::countr_zero(rest);
        for (Assignment cols = rest & (rest - 1); cols != 0; cols &= cols - 1)
            total += checked_pow(inner_product(Pprime.rows[static_cast<std::size_t>(r)],
                                               Pprime.rows[static_cast<std::size_t>(std::countr_zero(cols))]),
                                 l);
    }
    return total;
}

std::string export_qubo(const QuboProblem& qubo, std::string_view format)
{
    if (format == "text") {
        std::ostringstream os;
        os << "qubo q1=" << qubo.q1 << " q2=" << qubo.q2 << " l=" << qubo.l << " rho=" << qubo.rho
           << " constant=" << qubo.constant << " variant=" << to_string(qubo.variant) << '\n';
        for (int r = 0; r < qubo.q1; ++r) {
            for (int c = 0; c < qubo.q1; ++c) os << (c ? " " : "") << qubo.coeff(r, c);
            os << '\n';
        }
        return os.str();
    }
    if (format == "json") {
        nlohmann::ordered_json j;
        j["q1"] = qubo.q1;
        j["q2"] = qubo.q2;
        j["l"] = qubo.l;
        j["rho"] = qubo.rho;
        j["constant"] = qubo.constant;
        j["variant"] = to_string(qubo.variant);
        auto rows = nlohmann::json::array();
        for (int r = 0; r < qubo.q1; ++r) {
            auto row = nlohmann::json::array();
            for (int c = 0; c < qubo.q1; ++c) row.push_back(qubo.coeff(r, c));
            rows.push_back(std::move(row));
        }
        j["Q"] = std::move(rows);
        return j.dump(1) + "\n";
    }
    throw ParameterError("unsupported QUBO export format '" + std::string(format) + "'");
}

QuboProblem import_qubo(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string tag;
    in >> tag;
    if (tag != "qubo") throw ParameterError("QUBO text must start with 'qubo'");

    QuboProblem qp;
    bool have_q1 = false;
    std::string header;
    std::getline(in, header);
    std::istringstream fields(header);
    std::string kv;
    while (fields >> kv) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) throw ParameterError("malformed QUBO header field '" + kv + "'");
        const std::string key = kv.substr(0, eq);
        const std::string val = kv.substr(eq + 1);
        if (key == "q1") { qp.q1 = std::stoi(val); have_q1 = true; }
        else if (key == "q2") qp.q2 = std::stoi(val);
        else if (key == "l") qp.l = std::stoi(val);
        else if (key == "rho") qp.rho = std::stoll(val);
        else if (key == "constant") qp.constant = std::stoll(val);
        else if (key == "variant") qp.variant = parse_variant(val);
        else throw ParameterError("unknown QUBO header field '" + key + "'");
    }
    if (!have_q1 || qp.q1 <= 0) throw ParameterError("QUBO header lacks a positive q1");
    qp.Q.assign(static_cast<std::size_t>(qp.q1) * qp.q1, 0);
    for (int r = 0; r < qp.q1; ++r)
        for (int c = 0; c < qp.q1; ++c) {
            if (!(in >> qp.coeff(r, c))) throw ParameterError("QUBO matrix truncated");
            if (c < r && qp.coeff(r, c) != 0) throw ParameterError("QUBO matrix is not upper triangular");
        }
    std::string extra;
    if (in >> extra) throw ParameterError("trailing data after QUBO matrix");
    return qp;
}

std::optional<CellMismatch> first_mismatch(const QuboProblem& expected, const QuboProblem& actual)
{
    auto header = [](std::string field, std::int64_t e, std::int64_t a) -> std::optional<CellMismatch> {
        if (e == a) return std::nullopt;
        return CellMismatch{-1, -1, e, a, std::move(field)};
    };
    if (auto m = header("q1", expected.q1, actual.q1)) return m;
    for (int r = 0; r < expected.q1; ++r)
        for (int c = 0; c < expected.q1; ++c)
            if (expected.coeff(r, c) != actual.coeff(r, c))
                return CellMismatch{r, c, expected.coeff(r, c), actual.coeff(r, c), "Q"};
    if (auto m = header("constant", expected.constant, actual.constant)) return m;
    if (auto m = header("q2", expected.q2, actual.q2)) return m;
    if (auto m = header("l", expected.l, actual.l)) return m;
    if (auto m = header("rho", expected.rho, actual.rho)) return m;
    if (auto m = header("variant", static_cast<int>(expected.variant), static_cast<int>(actual.variant))) return m;
    return std::nullopt;
}

} // namespace cwc
