#include "cwc/code_core.hpp"

#include <algorithm>
#include <bit>
#include <bitset>
#include <ostream>
#include <sstream>

#include "cwc/checked.hpp"
#include "cwc/errors.hpp"

namespace cwc {

CodeParams CodeParams::make(int n, int w, int d, int M)
{
    std::ostringstream why;
    if (n < 1 || n > 63) why << "n must be in [1, 63], got " << n;
    else if (w < 1 || w > n) why << "w must satisfy 0 < w <= n, got w=" << w << " n=" << n;
    else if (d < 2 || d % 2 != 0) why << "d must be a positive even integer, got " << d;
    else if (d > 2 * w) why << "d=" << d << " exceeds 2w=" << 2 * w << ": no two weight-w words are that far apart";
    else if (M < 2) why << "M must be at least 2, got " << M;
    if (!why.str().empty()) throw ParameterError(why.str());
    return CodeParams{n, w, d, M};
}

std::ostream& operator<<(std::ostream& os, const CodeParams& p)
{
    return os << "(n=" << p.n << ", w=" << p.w << ", d=" << p.d << ", M=" << p.M << ")";
}

BitRow parse_row(std::string_view text)
{
    if (text.size() > 63) throw ParameterError("row longer than 63 columns");
    BitRow row = 0;
    for (std::size_t c = 0; c < text.size(); ++c) {
        if (text[c] == '1') row |= BitRow{1} << c;
        else if (text[c] != '0') throw ParameterError("row contains a character other than 0/1");
    }
    return row;
}

std::string format_row(BitRow row, int n)
{
    std::string s(static_cast<std::size_t>(n), '0');
    for (int c = 0; c < n; ++c)
        if ((row >> c) & 1U) s[static_cast<std::size_t>(c)] = '1';
    return s;
}

std::string serialize(const BitMatrix& m)
{
    std::string out;
    out.reserve(m.rows.size() * static_cast<std::size_t>(m.n + 1));
    for (BitRow r : m.rows) {
        out += format_row(r, m.n);
        out += '\n';
    }
    return out;
}

BitMatrix deserialize_bit_matrix(std::string_view text)
{
    BitMatrix m;
    bool first = true;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        pos = end + 1;
        if (line.empty()) continue;
        if (first) {
            m.n = static_cast<int>(line.size());
            first = false;
        } else if (static_cast<int>(line.size()) != m.n) {
            throw ParameterError("bit matrix rows have unequal lengths");
        }
        m.rows.push_back(parse_row(line));
    }
    return m;
}

int weight(BitRow row) noexcept { return std::popcount(row); }

namespace {

void append_combinations(int n, int w, BitRow prefix, int col, std::vector<BitRow>& out)
{
    // Emits P(n, w) shifted to start at column `col`, prefixed by the bits already chosen.
    if (w == 0) {
        out.push_back(prefix);
        return;
    }
    if (w == n) {
        BitRow ones = (n == 64) ? ~BitRow{0} : ((BitRow{1} << n) - 1);
        out.push_back(prefix | (ones << col));
        return;
    }
    append_combinations(n - 1, w - 1, prefix | (BitRow{1} << col), col + 1, out);
    append_combinations(n - 1, w, prefix, col + 1, out);
}

} // namespace

BitMatrix build_combinatorial_matrix(int n, int w)
{
    if (n < 0 || n > 63 || w < 0 || w > n)
        throw ParameterError("build_combinatorial_matrix requires 0 <= w <= n <= 63");
    const std::int64_t count = binomial(n, w);
    if (count > (std::int64_t{1} << 28))
        throw ResourceError("binomial(n, w) rows exceed the addressable limit");
    BitMatrix m;
    m.n = n;
    m.rows.reserve(static_cast<std::size_t>(count));
    append_combinations(n, w, 0, 0, m.rows);
    return m;
}

int hamming_distance(BitRow a, BitRow b) noexcept { return std::popcount(a ^ b); }
int inner_product(BitRow a, BitRow b) noexcept { return std::popcount(a & b); }

namespace {
void require_same_length(const std::vector<int>& a, const std::vector<int>& b)
{
    if (a.size() != b.size()) throw ParameterError("vectors have different lengths");
}
} // namespace

int hamming_distance(const std::vector<int>& a, const std::vector<int>& b)
{
    require_same_length(a, b);
    int dist = 0;
    for (std::size_t i = 0; i < a.size(); ++i) dist += (a[i] != b[i]);
    return dist;
}

int inner_product(const std::vector<int>& a, const std::vector<int>& b)
{
    require_same_length(a, b);
    int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

BitMatrix reduce_matrix(const BitMatrix& P, const CodeParams& params)
{
    if (P.rows.empty()) throw ParameterError("reduce_matrix on an empty matrix");
    if (P.n != params.n) throw ParameterError("matrix width differs from n");
    BitMatrix out;
    out.n = P.n;
    const BitRow p0 = P.rows.front();
    for (std::size_t r = 1; r < P.rows.size(); ++r)
        if (hamming_distance(P.rows[r], p0) >= params.d) out.rows.push_back(P.rows[r]);
    return out;
}

std::int64_t reduced_row_count(const CodeParams& params)
{
    const int max_overlap = params.w - params.d / 2;
    std::int64_t total = 0;
    for (int i = 0; i <= max_overlap; ++i)
        total = checked_add(total, checked_mul(binomial(params.w, i), binomial(params.n - params.w, params.w - i)));
    return total;
}

int min_distance(const BitMatrix& code)
{
    if (code.rows.size() < 2) throw ParameterError("min_distance needs at least two rows");
    int best = code.n + 1;
    for (std::size_t i = 0; i < code.rows.size(); ++i)
        for (std::size_t j = i + 1; j < code.rows.size(); ++j)
            best = std::min(best, hamming_distance(code.rows[i], code.rows[j]));
    return best;
}

Assignment parse_assignment(std::string_view text)
{
    if (text.size() > 63) throw ParameterError("assignment longer than 63 variables");
    return parse_row(text);
}

std::string format_assignment(Assignment x, int q1) { return format_row(x, q1); }

BitMatrix decode_solution(Assignment x, const BitMatrix& Pprime, const CodeParams& params)
{
    if (Pprime.rows.size() < 63 && (x >> Pprime.rows.size()) != 0)
        throw ParameterError("assignment selects rows beyond P'");
    BitMatrix code;
    code.n = params.n;
    code.rows.push_back(build_combinatorial_matrix(params.n, params.w).rows.front());
    for (std::size_t r = 0; r < Pprime.rows.size(); ++r)
        if ((x >> r) & 1U) code.rows.push_back(Pprime.rows[r]);
    return code;
}

ValidationReport validate_code(const BitMatrix& code, const CodeParams& params)
{
    ValidationReport rep;
    std::ostringstream msg;
    if (static_cast<int>(code.rows.size()) != params.M) {
        rep.row_count_ok = false;
        msg << "row count " << code.rows.size() << " != M=" << params.M << "; ";
    }
    if (code.n != params.n) {
        rep.lengths_ok = false;
        msg << "row length " << code.n << " != n=" << params.n << "; ";
    }
    for (std::size_t r = 0; r < code.rows.size(); ++r) {
        const bool long_row = code.n < 64 && (code.rows[r] >> code.n) != 0;
        const bool wrong_weight = weight(code.rows[r]) != params.w;
        if (long_row) rep.lengths_ok = false;
        if (wrong_weight) rep.weights_ok = false;
        if ((long_row || wrong_weight) && !rep.bad_row) {
            rep.bad_row = r;
            msg << "row " << r << " has weight " << weight(code.rows[r]) << " (w=" << params.w << "); ";
        }
    }
    if (code.rows.size() >= 2) {
        rep.observed_min_distance = min_distance(code);
        for (std::size_t i = 0; i < code.rows.size() && !rep.bad_pair; ++i)
            for (std::size_t j = i + 1; j < code.rows.size(); ++j)
                if (hamming_distance(code.rows[i], code.rows[j]) < params.d) {
                    rep.bad_pair = std::make_pair(i, j);
                    rep.distance_ok = false;
                    msg << "rows " << i << " and " << j << " at distance "
                        << hamming_distance(code.rows[i], code.rows[j]) << " < d=" << params.d << "; ";
                    break;
                }
    }
    rep.valid = rep.row_count_ok && rep.weights_ok && rep.lengths_ok && rep.distance_ok;
    rep.message = rep.valid ? "valid" : msg.str();
    return rep;
}

BitMatrix degenerate_code(const CodeParams& params)
{
    BitMatrix code;
    code.n = params.n;
    const int blocks = std::min(params.M, params.n / params.w);
    const BitRow block = (BitRow{1} << params.w) - 1;
    for (int b = 0; b < blocks; ++b) code.rows.push_back(block << (b * params.w));
    return code;
}

BitMatrix permute_columns(const BitMatrix& m, const std::vector<int>& perm)
{
    if (static_cast<int>(perm.size()) != m.n) throw ParameterError("permutation length differs from n");
    BitMatrix out;
    out.n = m.n;
    out.rows.reserve(m.rows.size());
    for (BitRow r : m.rows) {
        BitRow p = 0;
        for (int c = 0; c < m.n; ++c)
            if ((r >> perm[static_cast<std::size_t>(c)]) & 1U) p |= BitRow{1} << c;
        out.rows.push_back(p);
    }
    return out;
}

namespace {

// Maximum clique with greedy-colouring bounds over at most 256 vertices.
class MaxClique {
public:
    using Set = std::bitset<256>;

    explicit MaxClique(std::vector<Set> adjacency) : adj_(std::move(adjacency)) {}

    int solve()
    {
        Set all;
        for (std::size_t v = 0; v < adj_.size(); ++v) all.set(v);
        expand(0, all);
        return best_;
    }

private:
    void expand(int size, Set candidates)
    {
        std::vector<std::pair<std::size_t, int>> order; // (vertex, colour bound)
        colour_sort(candidates, order);
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            const auto [v, colour] = *it;
            if (size + colour <= best_) return;
            Set next = candidates & adj_[v];
            if (next.none()) best_ = std::max(best_, size + 1);
            else expand(size + 1, next);
            candidates.reset(v);
        }
    }

    void colour_sort(Set candidates, std::vector<std::pair<std::size_t, int>>& order) const
    {
        int colour = 0;
        while (candidates.any()) {
            ++colour;
            Set uncoloured = candidates;
            while (uncoloured.any()) {
                std::size_t v = 0;
                while (!uncoloured.test(v)) ++v;
                uncoloured.reset(v);
                uncoloured &= ~adj_[v];
                candidates.reset(v);
                order.emplace_back(v, colour);
            }
        }
    }

    std::vector<Set> adj_;
    int best_ = 0;
};

} // namespace

int max_code_size_exhaustive(int n, int d, int w)
{
    const BitMatrix P = build_combinatorial_matrix(n, w);
    if (P.rows.size() > 256) throw ResourceError("exhaustive A(n, d, w) limited to 256 candidate words");
    std::vector<MaxClique::Set> adj(P.rows.size());
    for (std::size_t i = 0; i < P.rows.size(); ++i)
        for (std::size_t j = 0; j < P.rows.size(); ++j)
            if (i != j && hamming_distance(P.rows[i], P.rows[j]) >= d) adj[i].set(j);
    return MaxClique(std::move(adj)).solve();
}

} // namespace cwc
