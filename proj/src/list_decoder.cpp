#include "proxdec/list_decoder.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace proxdec {

std::vector<double> oscillation_heights(const DecodeOutcome& outcome) {
    if (outcome.converged || !outcome.grad_tail)
        throw std::logic_error("oscillation_heights: outcome has no gradient tail");
    const auto& tail = *outcome.grad_tail;
    std::vector<double> delta(tail.last.size());
    for (std::size_t i = 0; i < delta.size(); ++i)
        delta[i] = std::abs(tail.last[i] - tail.prev[i]);
    return delta;
}

SuspectSet select_suspect_indices(std::span<const double> delta, int n_suspects) {
    if (n_suspects < 0) throw std::invalid_argument("suspect count must be >= 0");
    const int n = static_cast<int>(delta.size());
    const int take = std::min(n_suspects, n);

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return delta[a] < delta[b]; });

    SuspectSet s;
    s.indices.assign(order.begin(), order.begin() + take);
    s.heights.reserve(take);
    for (int i : s.indices) s.heights.push_back(delta[i]);
    return s;
}

CandidateList generate_candidates(std::span<const std::uint8_t> c_hat, const SuspectSet& suspects) {
    const int nbits = static_cast<int>(suspects.indices.size());
    if (nbits > 24) throw std::invalid_argument("candidate list too large: more than 24 suspects");
    std::vector<int> idx = suspects.indices;
    std::sort(idx.begin(), idx.end());

    CandidateList list;
    list.base.assign(c_hat.begin(), c_hat.end());
    const std::uint32_t count = std::uint32_t{1} << nbits;
    list.words.reserve(count);
    for (std::uint32_t pattern = 0; pattern < count; ++pattern) {
        BitWord w = list.base;
        for (int b = 0; b < nbits; ++b) w[idx[b]] = (pattern >> b) & 1u;
        list.words.push_back(std::move(w));
    }
    return list;
}

ListSelection ml_in_list(const ParityCheckCode& code, const CandidateList& candidates,
                         std::span<const double> y) {
    if (candidates.words.empty()) throw std::invalid_argument("ml_in_list: empty candidate list");
    if (static_cast<int>(y.size()) != code.n) throw std::invalid_argument("ml_in_list: |y| != n");

    // Flipping bit i toggles the checks in var_neighbors(i); candidates are
    // scored off the base word so each costs O(#diffs), not O(n + edges).
    const std::size_t sw = (code.m + 63) / 64;
    std::vector<std::uint64_t> base_syn(sw, 0);
    {
        const BitWord s = syndrome(code, candidates.base);
        for (int j = 0; j < code.m; ++j)
            if (s[j]) base_syn[j / 64] |= std::uint64_t{1} << (j % 64);
    }
    double base_corr = 0.0;
    for (int i = 0; i < code.n; ++i) base_corr += (1.0 - 2.0 * candidates.base[i]) * y[i];

    std::vector<std::uint64_t> syn(sw);
    double best_valid_corr = 0.0, best_any_corr = 0.0;
    int best_valid = -1, best_any = -1;
    for (std::size_t t = 0; t < candidates.words.size(); ++t) {
        const BitWord& w = candidates.words[t];
        syn = base_syn;
        double corr = base_corr;
        for (int i = 0; i < code.n; ++i) {
            if (w[i] == candidates.base[i]) continue;
            corr -= 2.0 * (1.0 - 2.0 * candidates.base[i]) * y[i];
            for (int j : code.var_neighbors[i]) syn[j / 64] ^= std::uint64_t{1} << (j % 64);
        }
        bool valid = true;
        for (std::uint64_t word : syn)
            if (word) { valid = false; break; }
        if (best_any < 0 || corr > best_any_corr) { best_any = static_cast<int>(t); best_any_corr = corr; }
        if (valid && (best_valid < 0 || corr > best_valid_corr)) {
            best_valid = static_cast<int>(t);
            best_valid_corr = corr;
        }
    }
    if (best_valid >= 0) return {candidates.words[best_valid], true};
    return {candidates.words[best_any], false};
}

DecodeOutcome decode_improved(const ParityCheckCode& code, std::span<const double> y,
                              const DecoderParams& params, int list_bits) {
    DecodeOutcome outcome = decode_proximal(code, y, params);
    if (outcome.converged) return outcome;

    const std::vector<double> delta = oscillation_heights(outcome);
    const SuspectSet suspects = select_suspect_indices(delta, list_bits);
    const CandidateList candidates = generate_candidates(outcome.c_hat, suspects);
    ListSelection sel = ml_in_list(code, candidates, y);

    outcome.c_hat = std::move(sel.word);
    outcome.converged = sel.valid;
    if (sel.valid) outcome.grad_tail.reset();
    return outcome;
}

}  // namespace proxdec
