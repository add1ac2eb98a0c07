#include <random>
#include <sstream>

#include "doctest.h"
#include "proxdec/gf2.hpp"
#include "proxdec/ldpc_code.hpp"
#include "test_util.hpp"

using namespace proxdec;

TEST_CASE("parse_alist: length-2 repetition code") {
    const ParityCheckCode code = parse_alist("2 1\n1 2\n1 1\n2\n1\n1\n1 2\n");
    CHECK(code.n == 2);
    CHECK(code.m == 1);
    CHECK(code.check_neighbors[0] == std::vector<int>{0, 1});
    CHECK(code.var_neighbors[0] == std::vector<int>{0});
    CHECK(code.var_neighbors[1] == std::vector<int>{0});
}

TEST_CASE("parse_alist: 204-bit (3,6)-regular code") {
    const ParityCheckCode code = parse_alist_file(testutil::data_path("reg3x6_n204.alist"));
    CHECK(code.n == 204);
    CHECK(code.m == 102);
    for (const auto& row : code.check_neighbors) CHECK(row.size() == 6);
    for (const auto& col : code.var_neighbors) CHECK(col.size() == 3);
}

TEST_CASE("parse_alist: errors carry line numbers") {
    SUBCASE("index out of range") {
        CHECK_THROWS_WITH_AS(parse_alist("2 1\n1 2\n1 1\n2\n3\n1\n1 2\n"),
                             doctest::Contains("index out of range"), std::runtime_error);
    }
    SUBCASE("malformed header") {
        CHECK_THROWS_WITH_AS(parse_alist("1 3\n"), doctest::Contains("line 1"),
                             std::runtime_error);
    }
    SUBCASE("truncated input") {
        CHECK_THROWS_AS(parse_alist("2 1\n1 2\n1 1\n"), std::runtime_error);
    }
    SUBCASE("duplicate index in a row") {
        CHECK_THROWS_WITH_AS(parse_alist("3 1\n1 2\n1 1 0\n2\n1\n1\n\n1 1\n"),
                             doctest::Contains("duplicate"), std::runtime_error);
    }
    SUBCASE("column/row list disagreement") {
        CHECK_THROWS_AS(parse_alist("3 1\n1 2\n1 1 0\n2\n1\n1\n\n2 3\n"), std::runtime_error);
    }
}

TEST_CASE("parse_alist: zero padding is skipped") {
    // fixed-width dialect pads short lists with zeros
    const ParityCheckCode code = parse_alist("3 2\n2 2\n2 1 1\n2 2\n1 2\n1 0\n2 0\n1 2\n1 3\n");
    CHECK(code.n == 3);
    CHECK(code.check_neighbors[0] == std::vector<int>{0, 1});
    CHECK(code.check_neighbors[1] == std::vector<int>{0, 2});
}

TEST_CASE("syndrome basics") {
    const ParityCheckCode rep2 = testutil::repetition2();
    CHECK(syndrome(rep2, BitWord{0, 0}) == BitWord{0});
    CHECK(syndrome(rep2, BitWord{1, 0}) == BitWord{1});
    CHECK(syndrome(rep2, BitWord{1, 1}) == BitWord{0});
    CHECK_THROWS_AS(syndrome(rep2, BitWord{1}), std::invalid_argument);
}

TEST_CASE("derive_generator") {
    SUBCASE("repetition-2") {
        const GeneratorMatrix gen = derive_generator(testutil::repetition2());
        REQUIRE(gen.k == 1);
        CHECK(gen.rows[0] == BitWord{1, 1});
        CHECK_FALSE(gen.rank_deficient);
    }
    SUBCASE("hand-worked 2x3 chain") {
        const GeneratorMatrix gen = derive_generator(make_code(3, {{0, 1}, {1, 2}}));
        REQUIRE(gen.k == 1);
        CHECK(gen.rows[0] == BitWord{1, 1, 1});
    }
    SUBCASE("204.33.484-style code has k = 102") {
        const ParityCheckCode code = parse_alist_file(testutil::data_path("reg3x6_n204.alist"));
        const GeneratorMatrix gen = derive_generator(code);
        CHECK(gen.k == 102);
        CHECK_FALSE(gen.rank_deficient);
        for (const auto& row : gen.rows) CHECK(in_code(code, row));
    }
    SUBCASE("rank-deficient H is reported") {
        // duplicated check row
        const GeneratorMatrix gen = derive_generator(make_code(3, {{0, 1}, {0, 1}}));
        CHECK(gen.rank_deficient);
        CHECK(gen.k == 2);
    }
}

TEST_CASE("encode") {
    const GeneratorMatrix gen = derive_generator(testutil::repetition2());
    CHECK(encode(gen, BitWord{0}) == BitWord{0, 0});
    CHECK(encode(gen, BitWord{1}) == BitWord{1, 1});
    CHECK_THROWS_AS(encode(gen, BitWord{1, 0}), std::invalid_argument);
}

TEST_CASE("encode linearity (property)") {
    const ParityCheckCode code = testutil::random_code(12, 5, 7);
    const GeneratorMatrix gen = derive_generator(code);
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        BitWord u(gen.k), v(gen.k), uv(gen.k);
        for (int i = 0; i < gen.k; ++i) {
            u[i] = rng() & 1u;
            v[i] = rng() & 1u;
            uv[i] = u[i] ^ v[i];
        }
        BitWord sum = encode(gen, u);
        const BitWord cv = encode(gen, v);
        for (int i = 0; i < gen.n; ++i) sum[i] ^= cv[i];
        CHECK(sum == encode(gen, uv));
        CHECK(in_code(code, sum));
    }
}

TEST_CASE("enumerate_codewords") {
    CHECK(enumerate_codewords(testutil::repetition2()) ==
          std::vector<BitWord>{{0, 0}, {1, 1}});
    CHECK(enumerate_codewords(testutil::hamming74()).size() == 16);
    CHECK(enumerate_codewords(testutil::repetition_n(5)) ==
          std::vector<BitWord>{{0, 0, 0, 0, 0}, {1, 1, 1, 1, 1}});
    ParityCheckCode big = testutil::repetition_n(25);
    CHECK_THROWS_AS(enumerate_codewords(big), std::invalid_argument);
}

TEST_CASE("codeword count matches 2^(n - rank) (property)") {
    for (std::uint64_t seed : {1, 2, 3, 4, 5}) {
        const ParityCheckCode code = testutil::random_code(10, 5, seed);
        gf2::BitMatrix h(code.m, code.n);
        for (int j = 0; j < code.m; ++j)
            for (int i : code.check_neighbors[j]) h.set(j, i, true);
        const std::size_t r = gf2::rank(h);
        CHECK(enumerate_codewords(code).size() == (std::size_t{1} << (code.n - r)));
        CHECK(derive_generator(code).k == code.n - (int)r);
    }
}

TEST_CASE("transpose consistency after parsing (property)") {
    const ParityCheckCode code = parse_alist_file(testutil::data_path("reg3x6_n204.alist"));
    for (int j = 0; j < code.m; ++j)
        for (int i : code.check_neighbors[j]) {
            const auto& col = code.var_neighbors[i];
            CHECK(std::find(col.begin(), col.end(), j) != col.end());
        }
    for (int i = 0; i < code.n; ++i)
        for (int j : code.var_neighbors[i]) {
            const auto& row = code.check_neighbors[j];
            CHECK(std::find(row.begin(), row.end(), i) != row.end());
        }
}

TEST_CASE("alist round trip (property)") {
    for (std::uint64_t seed : {10, 20, 30}) {
        const ParityCheckCode code = testutil::random_code(14, 6, seed);
        const ParityCheckCode back = parse_alist(render_alist(code));
        CHECK(back.n == code.n);
        CHECK(back.m == code.m);
        CHECK(back.check_neighbors == code.check_neighbors);
        CHECK(back.var_neighbors == code.var_neighbors);
    }
    const ParityCheckCode code = parse_alist_file(testutil::data_path("reg3x6_n204.alist"));
    const ParityCheckCode back = parse_alist(render_alist(code));
    CHECK(back.check_neighbors == code.check_neighbors);
}
