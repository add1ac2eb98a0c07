#include <random>

#include "doctest.h"
#include "proxdec/bp.hpp"
#include "proxdec/channel.hpp"
#include "test_util.hpp"

using namespace proxdec;

TEST_CASE("decode_bp recovers noiseless frames") {
    const ParityCheckCode code = testutil::hamming74();
    const BpParams params;
    for (const BitWord& c : enumerate_codewords(code)) {
        const DecodeOutcome out = decode_bp(code, bpsk_map(c), 0.5, params);
        CHECK(out.converged);
        CHECK(out.c_hat == c);
        CHECK(out.iterations <= 2);
    }
}

TEST_CASE("decode_bp converges at iteration 1 when the hard decision is valid") {
    const ParityCheckCode code = testutil::hamming74();
    const std::vector<double> y = {0.9, 1.1, 0.8, 1.0, 0.95, 1.05, 0.9};  // all-zero codeword
    const DecodeOutcome out = decode_bp(code, y, 0.5, BpParams{});
    CHECK(out.converged);
    CHECK(out.iterations == 1);
    CHECK(out.c_hat == BitWord(7, 0));
}

TEST_CASE("decode_bp corrects a single flipped bit of the Hamming code") {
    const ParityCheckCode code = testutil::hamming74();
    for (int flip = 0; flip < 7; ++flip) {
        std::vector<double> y = bpsk_map(BitWord(7, 0));
        y[flip] = -0.3;
        const DecodeOutcome out = decode_bp(code, y, 0.6, BpParams{});
        CHECK(out.converged);
        CHECK(out.c_hat == BitWord(7, 0));
    }
}

TEST_CASE("decode_bp argument validation") {
    const ParityCheckCode code = testutil::repetition2();
    CHECK_THROWS_AS(decode_bp(code, std::vector<double>{1.0}, 0.5, BpParams{}),
                    std::invalid_argument);
    CHECK_THROWS_AS(decode_bp(code, std::vector<double>{1.0, 1.0}, 0.0, BpParams{}),
                    std::invalid_argument);
}

TEST_CASE("decode_bp converged implies zero syndrome; grad_tail absent (property)") {
    const ParityCheckCode code = testutil::hamming74();
    std::mt19937_64 rng(41);
    std::normal_distribution<double> noise(0.0, 0.9);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<double> y(code.n);
        for (auto& v : y) v = 1.0 + noise(rng);
        const DecodeOutcome out = decode_bp(code, y, 0.9, BpParams{});
        CHECK(out.converged == in_code(code, out.c_hat));
        CHECK_FALSE(out.grad_tail.has_value());
    }
}

TEST_CASE("decode_bp output is invariant under codeword translation (property)") {
    // shifting the sent word by a codeword and flipping y accordingly shifts
    // the output by the same codeword; this is what makes all-zero
    // simulation representative
    const ParityCheckCode code = testutil::hamming74();
    const std::vector<BitWord> codebook = enumerate_codewords(code);
    std::mt19937_64 rng(43);
    std::normal_distribution<double> noise(0.0, 0.7);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> y(code.n);
        for (auto& v : y) v = 1.0 + noise(rng);
        const BitWord& shift = codebook[rng() % codebook.size()];
        std::vector<double> y_shifted(code.n);
        for (int i = 0; i < code.n; ++i) y_shifted[i] = shift[i] ? -y[i] : y[i];

        const DecodeOutcome a = decode_bp(code, y, 0.7, BpParams{});
        const DecodeOutcome b = decode_bp(code, y_shifted, 0.7, BpParams{});
        BitWord translated = a.c_hat;
        for (int i = 0; i < code.n; ++i) translated[i] ^= shift[i];
        CHECK(b.c_hat == translated);
        CHECK(b.converged == a.converged);
    }
}
