#include "proxdec/ldpc_code.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "proxdec/gf2.hpp"

namespace proxdec {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
    throw std::runtime_error("alist parse error at line " + std::to_string(line) + ": " + what);
}

// Line-oriented integer reader: one logical record per non-empty-or-adjacency
// line, tolerant of \r\n endings and trailing blanks.
class LineReader {
  public:
    explicit LineReader(std::istream& in) : in_(in) {}

    // Next line as a vector of integers; may be empty (blank line counts as
    // an empty adjacency list when allow_empty is set).
    std::vector<int> next_line(const char* what, bool allow_empty = false) {
        std::string raw;
        while (std::getline(in_, raw)) {
            ++line_;
            if (!raw.empty() && raw.back() == '\r') raw.pop_back();
            std::istringstream tok(raw);
            std::vector<int> vals;
            long long v;
            while (tok >> v) {
                if (v < -1000000000LL || v > 1000000000LL)
                    parse_fail(line_, "integer out of range");
                vals.push_back(static_cast<int>(v));
            }
            std::string junk;
            if (tok.clear(), tok >> junk)
                parse_fail(line_, std::string("non-integer token in ") + what);
            if (!vals.empty() || allow_empty) return vals;
            // skip stray blank lines between records
        }
        parse_fail(line_ + 1, std::string("unexpected end of input, expected ") + what);
    }
    int line() const { return line_; }

  private:
    std::istream& in_;
    int line_ = 0;
};

void check_adjacency(const std::vector<std::vector<int>>& lists, int limit, const char* side) {
    // lists already 0-based; duplicates and range were rejected during parse.
    for (const auto& l : lists) {
        for (int v : l) {
            if (v < 0 || v >= limit)
                throw std::invalid_argument(std::string(side) + " index out of range");
        }
    }
}

}  // namespace

ParityCheckCode make_code(int n, std::vector<std::vector<int>> check_neighbors) {
    const int m = static_cast<int>(check_neighbors.size());
    if (m < 1 || m >= n) throw std::invalid_argument("require 1 <= m < n");
    check_adjacency(check_neighbors, n, "variable");

    ParityCheckCode code;
    code.n = n;
    code.m = m;
    code.check_neighbors = std::move(check_neighbors);
    code.var_neighbors.assign(n, {});
    for (int j = 0; j < m; ++j) {
        std::vector<int> seen = code.check_neighbors[j];
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
            throw std::invalid_argument("duplicate variable index in check row");
        for (int i : code.check_neighbors[j]) code.var_neighbors[i].push_back(j);
    }
    return code;
}

ParityCheckCode parse_alist(std::istream& in) {
    LineReader r(in);
    const std::vector<int> header = r.next_line("header \"n m\"");
    if (header.size() != 2) parse_fail(r.line(), "malformed header: expected \"n m\"");
    const int n = header[0], m = header[1];
    if (n < 2 || m < 1 || m >= n) parse_fail(r.line(), "malformed header: need 1 <= m < n");
    const std::vector<int> maxdeg = r.next_line("max degrees");
    if (maxdeg.size() != 2) parse_fail(r.line(), "malformed max-degree line");

    const std::vector<int> col_deg = r.next_line("column degrees");
    if (static_cast<int>(col_deg.size()) != n) parse_fail(r.line(), "expected n column degrees");
    const std::vector<int> row_deg = r.next_line("row degrees");
    if (static_cast<int>(row_deg.size()) != m) parse_fail(r.line(), "expected m row degrees");
    for (int d : col_deg)
        if (d < 0 || d > m) parse_fail(r.line(), "column degree out of range");
    for (int d : row_deg)
        if (d < 0 || d > n) parse_fail(r.line(), "row degree out of range");

    // One adjacency list per line; zero entries are fixed-width padding.
    auto read_list = [&](int declared, int index_limit, const char* what) {
        std::vector<int> out;
        for (int v : r.next_line(what, declared == 0)) {
            if (v == 0) continue;
            if (v < 1 || v > index_limit)
                parse_fail(r.line(), std::string(what) + " index out of range");
            out.push_back(v - 1);
        }
        std::vector<int> sorted = out;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            parse_fail(r.line(), std::string("duplicate ") + what + " index in list");
        if (static_cast<int>(out.size()) != declared)
            parse_fail(r.line(), std::string(what) + " list length disagrees with declared degree");
        return out;
    };

    std::vector<std::vector<int>> cols(n), rows(m);
    for (int i = 0; i < n; ++i) cols[i] = read_list(col_deg[i], m, "check");
    for (int j = 0; j < m; ++j) rows[j] = read_list(row_deg[j], n, "variable");

    // Cross-check the two adjacency blocks against each other.
    ParityCheckCode code = make_code(n, std::move(rows));
    for (int i = 0; i < n; ++i) {
        std::vector<int> expect = code.var_neighbors[i];
        std::vector<int> got = cols[i];
        std::sort(expect.begin(), expect.end());
        std::sort(got.begin(), got.end());
        if (expect != got)
            parse_fail(r.line(), "column list for variable " + std::to_string(i + 1) +
                                     " disagrees with row lists");
    }
    return code;
}

ParityCheckCode parse_alist(const std::string& text) {
    std::istringstream in(text);
    return parse_alist(in);
}

ParityCheckCode parse_alist_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open alist file: " + path);
    return parse_alist(in);
}

std::string render_alist(const ParityCheckCode& code) {
    std::ostringstream out;
    int max_col = 0, max_row = 0;
    for (const auto& l : code.var_neighbors) max_col = std::max(max_col, (int)l.size());
    for (const auto& l : code.check_neighbors) max_row = std::max(max_row, (int)l.size());
    out << code.n << ' ' << code.m << '\n' << max_col << ' ' << max_row << '\n';
    for (int i = 0; i < code.n; ++i) out << code.var_neighbors[i].size() << (i + 1 < code.n ? ' ' : '\n');
    for (int j = 0; j < code.m; ++j) out << code.check_neighbors[j].size() << (j + 1 < code.m ? ' ' : '\n');
    for (const auto& l : code.var_neighbors) {
        for (std::size_t t = 0; t < l.size(); ++t) out << l[t] + 1 << (t + 1 < l.size() ? ' ' : '\n');
        if (l.empty()) out << '\n';
    }
    for (const auto& l : code.check_neighbors) {
        for (std::size_t t = 0; t < l.size(); ++t) out << l[t] + 1 << (t + 1 < l.size() ? ' ' : '\n');
        if (l.empty()) out << '\n';
    }
    return out.str();
}

BitWord syndrome(const ParityCheckCode& code, std::span<const std::uint8_t> c) {
    if (static_cast<int>(c.size()) != code.n) throw std::invalid_argument("syndrome: |c| != n");
    BitWord s(code.m, 0);
    for (int j = 0; j < code.m; ++j) {
        std::uint8_t acc = 0;
        for (int i : code.check_neighbors[j]) acc ^= (c[i] & 1u);
        s[j] = acc;
    }
    return s;
}

bool in_code(const ParityCheckCode& code, std::span<const std::uint8_t> c) {
    if (static_cast<int>(c.size()) != code.n) throw std::invalid_argument("in_code: |c| != n");
    for (int j = 0; j < code.m; ++j) {
        std::uint8_t acc = 0;
        for (int i : code.check_neighbors[j]) acc ^= (c[i] & 1u);
        if (acc) return false;
    }
    return true;
}

GeneratorMatrix derive_generator(const ParityCheckCode& code) {
    gf2::BitMatrix h(code.m, code.n);
    for (int j = 0; j < code.m; ++j)
        for (int i : code.check_neighbors[j]) h.set(j, i, true);
    const std::size_t r = gf2::rank(h);

    GeneratorMatrix gen;
    gen.n = code.n;
    gen.rows = gf2::null_space(std::move(h));
    gen.k = static_cast<int>(gen.rows.size());
    gen.rank_deficient = (static_cast<int>(r) < code.m);
    return gen;
}

BitWord encode(const GeneratorMatrix& gen, std::span<const std::uint8_t> u) {
    if (static_cast<int>(u.size()) != gen.k) throw std::invalid_argument("encode: |u| != k");
    BitWord c(gen.n, 0);
    for (int r = 0; r < gen.k; ++r) {
        if (!(u[r] & 1u)) continue;
        for (int i = 0; i < gen.n; ++i) c[i] ^= gen.rows[r][i];
    }
    return c;
}

std::vector<BitWord> enumerate_codewords(const ParityCheckCode& code) {
    if (code.n > 24) throw std::invalid_argument("enumerate_codewords: n > 24");
    std::vector<std::uint32_t> row_mask(code.m, 0);
    for (int j = 0; j < code.m; ++j)
        for (int i : code.check_neighbors[j]) row_mask[j] |= (std::uint32_t{1} << i);

    std::vector<BitWord> words;
    const std::uint32_t top = std::uint32_t{1} << code.n;
    for (std::uint32_t w = 0; w < top; ++w) {
        bool ok = true;
        for (int j = 0; j < code.m; ++j) {
            if (__builtin_popcount(w & row_mask[j]) & 1) { ok = false; break; }
        }
        if (!ok) continue;
        BitWord c(code.n);
        for (int i = 0; i < code.n; ++i) c[i] = (w >> i) & 1u;
        words.push_back(std::move(c));
    }
    return words;
}

}  // namespace proxdec
