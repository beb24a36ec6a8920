#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cwc {

/// Search condition (n, w, d, M): M words of length n and weight w, pairwise distance >= d.
struct CodeParams {
    int n = 0;
    int w = 0;
    int d = 0;
    int M = 0;

    /// Validating constructor. Odd d, d > 2w, w > n, M < 2 and n > 63 are rejected.
    static CodeParams make(int n, int w, int d, int M);

    /// d = 2w: codewords must have disjoint supports, answer is floor(n / w).
    bool degenerate() const noexcept { return d == 2 * w; }

    friend bool operator==(const CodeParams&, const CodeParams&) = default;
};

std::ostream& operator<<(std::ostream& os, const CodeParams& p);

/// A row vector of length <= 63 packed into a word. Column c lives at bit c.
using BitRow = std::uint64_t;

/// Ordered list of length-n binary rows (combinatorial matrices, codebooks).
struct BitMatrix {
    int n = 0;
    std::vector<BitRow> rows;

    std::size_t size() const noexcept { return rows.size(); }
    bool bit(std::size_t r, int c) const noexcept { return (rows[r] >> c) & 1U; }

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;
};

/// Parse "1110000" (column 0 first).
BitRow parse_row(std::string_view text);
std::string format_row(BitRow row, int n);

/// One row per line of '0'/'1' characters.
std::string serialize(const BitMatrix& m);
BitMatrix deserialize_bit_matrix(std::string_view text);

int weight(BitRow row) noexcept;

/// P(n, w) in the recursive order [1 | P(n-1, w-1); 0 | P(n-1, w)].
BitMatrix build_combinatorial_matrix(int n, int w);

int hamming_distance(BitRow a, BitRow b) noexcept;
int inner_product(BitRow a, BitRow b) noexcept;

// Vector-length-checked overloads for callers holding explicit 0/1 vectors.
int hamming_distance(const std::vector<int>& a, const std::vector<int>& b);
int inner_product(const std::vector<int>& a, const std::vector<int>& b);

/// P'(n, w): rows of P other than p0 whose distance from p0 is at least d, order preserved.
BitMatrix reduce_matrix(const BitMatrix& P, const CodeParams& params);

/// Row count of P'(n, w) from the closed-form sum over overlaps with p0.
std::int64_t reduced_row_count(const CodeParams& params);

/// Minimum pairwise Hamming distance; needs at least two rows.
int min_distance(const BitMatrix& code);

/// Binary assignment over the rows of P', bit r = x_r.
using Assignment = std::uint64_t;

Assignment parse_assignment(std::string_view text);
std::string format_assignment(Assignment x, int q1);

/// p0 followed by every row r of P' with x_r = 1.
BitMatrix decode_solution(Assignment x, const BitMatrix& Pprime, const CodeParams& params);

struct ValidationReport {
    bool valid = true;
    bool row_count_ok = true;
    bool weights_ok = true;
    bool lengths_ok = true;
    bool distance_ok = true;
    int observed_min_distance = -1;
    std::optional<std::size_t> bad_row;                        ///< first row with wrong weight/length
    std::optional<std::pair<std::size_t, std::size_t>> bad_pair; ///< first pair closer than d
    std::string message;
};

ValidationReport validate_code(const BitMatrix& code, const CodeParams& params);

/// Disjoint-support code for the degenerate d = 2w family: min(M, floor(n / w)) rows.
BitMatrix degenerate_code(const CodeParams& params);

/// Apply a column permutation: column c of the result is column perm[c] of the input.
BitMatrix permute_columns(const BitMatrix& m, const std::vector<int>& perm);

/// A(n, d, w) by exhaustive maximum-clique search. Practical for n <= 9.
int max_code_size_exhaustive(int n, int d, int w);

} // namespace cwc
