#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "proxdec/ldpc_code.hpp"
#include "proxdec/proximal.hpp"

namespace proxdec {

/// The N variable positions with the smallest oscillation height, i.e. the
/// bits most likely still wrong after a non-converged proximal decode.
struct SuspectSet {
    std::vector<int> indices;     // ascending, ties in height broken by index
    std::vector<double> heights;  // matching Delta values
};

struct CandidateList {
    std::vector<BitWord> words;  // 2^|suspects| words, binary counting order
    BitWord base;
};

struct ListSelection {
    BitWord word;
    bool valid;  // true iff selected from the valid sublist
};

/// Delta_i = |grad_h_i[K] - grad_h_i[K-1]|. Requires a non-converged outcome.
std::vector<double> oscillation_heights(const DecodeOutcome& outcome);

/// min(N, n) indices of smallest Delta, stable ascending-index tie break.
/// N > n clamps to n.
SuspectSet select_suspect_indices(std::span<const double> delta, int n_suspects);

/// All 2^N assignments of the suspect positions, base word elsewhere.
/// Enumeration is binary counting with the smallest suspect index as the
/// least significant bit. Refuses |suspects| > 24.
CandidateList generate_candidates(std::span<const std::uint8_t> c_hat, const SuspectSet& suspects);

/// Correlation-maximizing selection <1-2c', y> over the valid sublist, or
/// over the whole list when no candidate is a codeword. Ties go to the
/// first word in enumeration order.
ListSelection ml_in_list(const ParityCheckCode& code, const CandidateList& candidates,
                         std::span<const double> y);

/// Proximal decoding followed, on non-convergence only, by the list step.
DecodeOutcome decode_improved(const ParityCheckCode& code, std::span<const double> y,
                              const DecoderParams& params, int list_bits);

}  // namespace proxdec
