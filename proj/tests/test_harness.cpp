#include <sstream>

#include "doctest.h"
#include "proxdec/channel.hpp"
#include "proxdec/harness.hpp"
#include "test_util.hpp"

using namespace proxdec;

namespace {

SweepConfig small_config() {
    SweepConfig cfg;
    cfg.params.max_iters = 50;
    cfg.max_frames = 200;
    cfg.min_frame_errors = 0;  // fixed frame count
    cfg.batch_size = 64;
    cfg.threads = 2;
    return cfg;
}

}  // namespace

TEST_CASE("run_point at very high SNR sees no errors") {
    const LoadedCode lc = prepare_code(testutil::hamming74());
    SweepConfig cfg = small_config();
    cfg.max_frames = 50;
    const PointStats p = run_point(lc, cfg, 20.0, 0);
    CHECK(p.frames == 50);
    CHECK(p.frame_errors == 0);
    CHECK(p.bit_errors == 0);
    CHECK(p.decoding_failures == 0);
    CHECK(p.fer == 0.0);
}

TEST_CASE("run_point is deterministic for any worker count") {
    const LoadedCode lc = prepare_code(testutil::hamming74());
    SweepConfig cfg = small_config();
    cfg.max_frames = 300;
    PointStats base;
    for (int threads : {1, 2, 5}) {
        cfg.threads = threads;
        const PointStats p = run_point(lc, cfg, 2.0, 0);
        if (threads == 1) {
            base = p;
            CHECK(p.frame_errors > 0);  // noisy enough to exercise counters
        } else {
            CHECK(p.frames == base.frames);
            CHECK(p.bit_errors == base.bit_errors);
            CHECK(p.frame_errors == base.frame_errors);
            CHECK(p.decoding_failures == base.decoding_failures);
        }
    }
}

TEST_CASE("early stop on min_frame_errors is batch-aligned and deterministic") {
    const LoadedCode lc = prepare_code(testutil::hamming74());
    SweepConfig cfg = small_config();
    cfg.max_frames = 100000;
    cfg.min_frame_errors = 20;
    cfg.threads = 1;
    const PointStats a = run_point(lc, cfg, 1.0, 0);
    cfg.threads = 4;
    const PointStats b = run_point(lc, cfg, 1.0, 0);
    CHECK(a.frames == b.frames);
    CHECK(a.frame_errors == b.frame_errors);
    CHECK(a.frame_errors >= 20);
    CHECK(a.frames % cfg.batch_size == 0);
    CHECK(a.frames < cfg.max_frames);
}

TEST_CASE("every decoding failure is a frame error, so DFR <= FER") {
    const LoadedCode lc = prepare_code(testutil::hamming74());
    for (DecoderKind kind : {DecoderKind::proximal, DecoderKind::improved, DecoderKind::bp}) {
        SweepConfig cfg = small_config();
        cfg.decoder = kind;
        cfg.list_bits = 3;
        cfg.max_frames = 500;
        const PointStats p = run_point(lc, cfg, 1.5, 0);
        CHECK(p.decoding_failures <= p.frame_errors);
        CHECK(p.frame_errors <= p.frames);
        CHECK(p.dfr <= p.fer);
    }
}

TEST_CASE("run_sweep rejects an empty grid") {
    SweepConfig cfg = small_config();
    CHECK_THROWS_AS(run_sweep(prepare_code(testutil::hamming74()), cfg),
                    std::invalid_argument);
}

TEST_CASE("run_sweep single point, fixed frame budget") {
    SweepConfig cfg = small_config();
    cfg.ebn0_grid = {0.0};
    cfg.max_frames = 10;
    cfg.batch_size = 10;
    const SweepStats stats = run_sweep(prepare_code(testutil::hamming74()), cfg);
    REQUIRE(stats.points.size() == 1);
    CHECK(stats.points[0].frames == 10);
}

TEST_CASE("sweep CSV round trips and is byte-stable") {
    SweepConfig cfg = small_config();
    cfg.ebn0_grid = {1.0, 2.0, 3.0};
    cfg.max_frames = 128;
    const LoadedCode lc = prepare_code(testutil::hamming74());
    const SweepStats stats = run_sweep(lc, cfg);
    const std::string csv = render_csv(stats);

    const SweepStats back = parse_csv(csv);
    REQUIRE(back.points.size() == stats.points.size());
    for (std::size_t i = 0; i < back.points.size(); ++i) {
        CHECK(back.points[i].ebn0_db == stats.points[i].ebn0_db);
        CHECK(back.points[i].frames == stats.points[i].frames);
        CHECK(back.points[i].bit_errors == stats.points[i].bit_errors);
        CHECK(back.points[i].frame_errors == stats.points[i].frame_errors);
        CHECK(back.points[i].decoding_failures == stats.points[i].decoding_failures);
        CHECK(back.points[i].fer == stats.points[i].fer);
        CHECK(back.points[i].ber == stats.points[i].ber);
        CHECK(back.points[i].dfr == stats.points[i].dfr);
    }
    CHECK(render_csv(back) == csv);

    // same seed, different worker count: identical bytes
    cfg.threads = 5;
    CHECK(render_csv(run_sweep(lc, cfg)) == csv);
}

TEST_CASE("improved output equals proximal output on every converging frame") {
    const LoadedCode lc = prepare_code(testutil::hamming74());
    SweepConfig cfg = small_config();
    const double sigma = ebn0_to_sigma(2.0, lc.rate);
    int converged = 0;
    for (std::uint64_t f = 0; f < 400; ++f) {
        cfg.decoder = DecoderKind::proximal;
        const FrameResult plain = simulate_frame(lc, cfg, sigma, 0, f);
        cfg.decoder = DecoderKind::improved;
        const FrameResult improved = simulate_frame(lc, cfg, sigma, 0, f);
        CHECK(plain.sent == improved.sent);  // same substream, same frame
        if (plain.outcome.converged) {
            ++converged;
            CHECK(improved.outcome.c_hat == plain.outcome.c_hat);
        }
    }
    CHECK(converged > 200);
}

TEST_CASE("error_position_profile on a synthetic failure fixture") {
    // plant errors at the two smallest-delta positions of a hand-made outcome
    DecodeOutcome out;
    out.converged = false;
    out.c_hat = {1, 0, 1, 0};
    out.grad_tail = GradTail{{0.0, 0.0, 0.0, 0.0}, {0.1, 0.2, 0.3, 0.4}};
    const std::vector<double> delta = oscillation_heights(out);
    const SuspectSet order = select_suspect_indices(delta, 4);
    const BitWord sent = {0, 1, 1, 0};  // errors at positions 0 and 1
    std::vector<int> rank_errors(4, 0);
    for (int rank = 0; rank < 4; ++rank)
        rank_errors[rank] = out.c_hat[order.indices[rank]] != sent[order.indices[rank]];
    CHECK(rank_errors == std::vector<int>{1, 1, 0, 0});
}

TEST_CASE("error_position_profile collects failures and counts at least one error each") {
    const LoadedCode lc = prepare_code(testutil::hamming74());
    SweepConfig cfg = small_config();
    cfg.params.max_iters = 20;
    cfg.max_frames = 20000;
    const ProfileStats stats = error_position_profile(lc, cfg, 0.0, 50);
    CHECK(stats.failures >= 50);
    std::uint64_t total_errors = 0;
    for (std::uint64_t e : stats.rank_errors) total_errors += e;
    // a failure is an invalid word, hence differs from the sent codeword
    CHECK(total_errors >= stats.failures);

    const std::string csv = render_profile_csv(stats);
    CHECK(csv.rfind("rank,errors,failures,probability\n", 0) == 0);
}

TEST_CASE("trace_run emits watched indices and validates them") {
    const LoadedCode lc = prepare_code(testutil::hamming74());
    SweepConfig cfg = small_config();
    std::ostringstream out;
    trace_run(lc, cfg, 8.0, 0, {0, 2}, out);
    std::istringstream lines(out.str());
    std::string header;
    std::getline(lines, header);
    CHECK(header == "iteration,index,s,r,grad_L,grad_h");
    int rows = 0;
    std::string line;
    while (std::getline(lines, line))
        if (!line.empty()) ++rows;
    CHECK(rows >= 2);
    CHECK(rows % 2 == 0);  // two watched indices per iteration

    std::ostringstream sink;
    CHECK_THROWS_AS(trace_run(lc, cfg, 8.0, 0, {7}, sink), std::invalid_argument);
}
