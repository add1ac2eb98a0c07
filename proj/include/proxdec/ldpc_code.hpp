#pragma once

#include <cstdint>
#include <istream>
#include <span>
#include <string>
#include <vector>

namespace proxdec {

using BitWord = std::vector<std::uint8_t>;

/// Binary linear code given by its sparse parity-check matrix H (m x n).
/// All indices are 0-based; conversion from the 1-based alist convention
/// happens once, at parse time. Immutable after construction and safe to
/// share across decoding threads.
struct ParityCheckCode {
    int n = 0;  // codeword length
    int m = 0;  // number of parity checks
    std::vector<std::vector<int>> check_neighbors;  // per check j: variables in N_c(j)
    std::vector<std::vector<int>> var_neighbors;    // per variable i: checks containing i

    double design_rate() const { return static_cast<double>(n - m) / n; }
};

/// Builds a code from per-check neighbor lists, deriving the transpose
/// adjacency. Throws std::invalid_argument on out-of-range or duplicate
/// indices or if not 1 <= m < n.
ParityCheckCode make_code(int n, std::vector<std::vector<int>> check_neighbors);

/// Parses the alist sparse-matrix format (MacKay archive). Zero entries in
/// adjacency lists (fixed-width padding dialect) are skipped. Errors carry
/// the offending line number.
ParityCheckCode parse_alist(std::istream& in);
ParityCheckCode parse_alist(const std::string& text);
ParityCheckCode parse_alist_file(const std::string& path);

std::string render_alist(const ParityCheckCode& code);

/// H c^T over GF(2); component j is the XOR of c over N_c(j).
BitWord syndrome(const ParityCheckCode& code, std::span<const std::uint8_t> c);

/// True iff the syndrome is all-zero.
bool in_code(const ParityCheckCode& code, std::span<const std::uint8_t> c);

/// k rows spanning the null space of H. rank_deficient is set when
/// rank(H) < m, in which case k > n - m and true_rate = k/n exceeds the
/// design rate.
struct GeneratorMatrix {
    int n = 0;
    int k = 0;
    std::vector<BitWord> rows;
    bool rank_deficient = false;

    double true_rate() const { return static_cast<double>(k) / n; }
};

GeneratorMatrix derive_generator(const ParityCheckCode& code);

/// GF(2) combination of generator rows selected by u (|u| = k).
BitWord encode(const GeneratorMatrix& gen, std::span<const std::uint8_t> u);

/// All codewords of the code, by brute force over 2^n words. Guarded to
/// n <= 24; throws std::invalid_argument beyond that.
std::vector<BitWord> enumerate_codewords(const ParityCheckCode& code);

}  // namespace proxdec
