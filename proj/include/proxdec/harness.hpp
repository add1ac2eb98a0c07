#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "proxdec/bp.hpp"
#include "proxdec/ldpc_code.hpp"
#include "proxdec/list_decoder.hpp"
#include "proxdec/proximal.hpp"

namespace proxdec {

enum class DecoderKind { proximal, improved, bp };
enum class MessageSource { all_zero, random_message };

DecoderKind decoder_kind_from_string(const std::string& s);
std::string to_string(DecoderKind k);

/// Code plus derived generator; `rate` is the true rate k/n when H is
/// rank-deficient, the design rate otherwise, and feeds the Eb/N0 to sigma
/// conversion.
struct LoadedCode {
    ParityCheckCode code;
    GeneratorMatrix gen;
    double rate;
};

LoadedCode load_code(const std::string& path);
LoadedCode prepare_code(ParityCheckCode code);

struct SweepConfig {
    std::string code_path;
    DecoderKind decoder = DecoderKind::proximal;
    DecoderParams params;
    int list_bits = 8;  // improved decoder only
    BpParams bp;
    std::vector<double> ebn0_grid;
    std::uint64_t master_seed = 1;
    std::uint64_t max_frames = 10'000'000;
    std::uint64_t min_frame_errors = 100;
    MessageSource message_source = MessageSource::random_message;
    int threads = 0;  // 0 = hardware concurrency
    // Stop-rule granularity: the early-stop condition is evaluated only on
    // batch boundaries, so the set of simulated frames is independent of
    // the worker count.
    std::uint64_t batch_size = 4096;
};

struct PointStats {
    double ebn0_db = 0.0;
    std::uint64_t frames = 0;
    std::uint64_t bit_errors = 0;
    std::uint64_t frame_errors = 0;
    std::uint64_t decoding_failures = 0;
    double fer = 0.0;
    double ber = 0.0;
    double dfr = 0.0;
    double seconds = 0.0;
};

struct SweepStats {
    std::vector<PointStats> points;
};

/// One frame of the pipeline encode -> BPSK -> AWGN -> decode, fully
/// determined by (master_seed, point_index, frame_index).
struct FrameResult {
    BitWord sent;
    DecodeOutcome outcome;
};

FrameResult simulate_frame(const LoadedCode& lc, const SweepConfig& config, double sigma,
                           std::size_t point_index, std::uint64_t frame_index);

PointStats run_point(const LoadedCode& lc, const SweepConfig& config, double ebn0_db,
                     std::size_t point_index);

SweepStats run_sweep(const SweepConfig& config);
SweepStats run_sweep(const LoadedCode& lc, const SweepConfig& config);

/// CSV with the fixed header ebn0_db,frames,bit_errors,frame_errors,
/// decoding_failures,fer,ber,dfr,seconds. Timing is volatile, so the
/// seconds column is written as 0 unless include_timing is set; this keeps
/// re-runs byte-identical for any worker count.
std::string render_csv(const SweepStats& stats, bool include_timing = false);
SweepStats parse_csv(std::istream& in);
SweepStats parse_csv(const std::string& text);

/// Per-rank error statistics over collected proximal decoding failures,
/// positions ordered by ascending oscillation height.
struct ProfileStats {
    std::uint64_t frames = 0;
    std::uint64_t failures = 0;
    std::vector<std::uint64_t> rank_errors;  // length n
    double probability(std::size_t rank0) const {
        return failures ? static_cast<double>(rank_errors[rank0]) / failures : 0.0;
    }
};

ProfileStats error_position_profile(const LoadedCode& lc, const SweepConfig& config,
                                    double ebn0_db, std::uint64_t target_failures);
std::string render_profile_csv(const ProfileStats& stats);

/// Per-iteration trace of s, r, grad_L, grad_h at the watched (0-based)
/// indices for one frame, as CSV rows. Throws on an out-of-range index.
void trace_run(const LoadedCode& lc, const SweepConfig& config, double ebn0_db,
               std::uint64_t frame_seed, const std::vector<int>& watch_indices,
               std::ostream& out);

}  // namespace proxdec
