#pragma once

#include <span>

#include "proxdec/ldpc_code.hpp"
#include "proxdec/proximal.hpp"

namespace proxdec {

struct BpParams {
    int max_iters = 200;
    double llr_clip = 30.0;  // tanh saturates in double precision near here
};

/// Flooding-schedule sum-product decoding on channel LLRs 2y/sigma^2.
/// The syndrome check runs on the current posterior before each message
/// update, so a received word whose hard decision is already valid
/// converges at iteration 1. grad_tail stays empty; s_final holds the
/// posterior LLRs.
DecodeOutcome decode_bp(const ParityCheckCode& code, std::span<const double> y, double sigma,
                        const BpParams& params);

}  // namespace proxdec
