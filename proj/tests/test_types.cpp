#include "ccode/types.hpp"

#include <random>

#include "doctest.h"

using namespace ccode;

TEST_CASE("hamming distance basics") {
    CHECK(hamming(make_vertex(0, 5), make_vertex(0, 5)) == 0);
    CHECK(hamming(make_vertex(0, 5), make_vertex(0b11111, 5)) == 5);
    // (110000) vs (011000), coordinate 0 first
    CHECK(hamming(parse_vertex_bits("110000", 6), parse_vertex_bits("011000", 6)) == 2);
    CHECK_THROWS_AS(hamming(make_vertex(0, 4), make_vertex(0, 5)), std::invalid_argument);
}

TEST_CASE("hamming is a metric (spot checks)") {
    std::mt19937 rng(12345);
    for (int t = 0; t < 2000; ++t) {
        int d = 1 + static_cast<int>(rng() % 7);
        bits_t mask = (d == 32) ? ~bits_t{0} : ((bits_t{1} << d) - 1);
        Vertex a = make_vertex(rng() & mask, d);
        Vertex b = make_vertex(rng() & mask, d);
        Vertex c = make_vertex(rng() & mask, d);
        CHECK(hamming(a, b) == hamming(b, a));
        CHECK((hamming(a, b) == 0) == (a == b));
        CHECK(hamming(a, c) <= hamming(a, b) + hamming(b, c));
    }
}

TEST_CASE("walk toggles coordinates") {
    auto seq = make_sequence(3, {0, 1, 2, 0, 1, 2});
    auto path = walk(make_vertex(0, 3), seq);
    REQUIRE(path.size() == 7);
    CHECK(path.back() == make_vertex(0, 3));

    // End vertex of the initial sequence of the length-26 example in d=6.
    auto initial = make_sequence(6, {0, 1, 2, 0, 3, 1, 4, 0, 2, 5, 3, 1, 2});
    auto end = walk_end(make_vertex(0, 6), initial);
    CHECK(vertex_tuple(end) == "(1,1,1,0,1,1)");

    auto empty = make_sequence(3, std::vector<std::uint8_t>{});
    CHECK(walk(make_vertex(0, 3), empty) == std::vector<Vertex>{make_vertex(0, 3)});
}

TEST_CASE("walk composes over concatenation") {
    std::mt19937 rng(99);
    for (int t = 0; t < 500; ++t) {
        int d = 2 + static_cast<int>(rng() % 6);
        auto rand_seq = [&](int len) {
            TransitionSequence s{d, {}};
            for (int i = 0; i < len; ++i)
                s.changes.push_back(static_cast<std::uint8_t>(rng() % static_cast<unsigned>(d)));
            return s;
        };
        auto a = rand_seq(static_cast<int>(rng() % 10));
        auto b = rand_seq(static_cast<int>(rng() % 10));
        Vertex start = make_vertex(rng() & ((bits_t{1} << d) - 1), d);
        CHECK(walk_end(start, concat(a, b)) == walk_end(walk_end(start, a), b));
    }
}

TEST_CASE("sequence text format") {
    // Appendix-style input with letters for coordinates 10+.
    auto seq = parse_sequence("A04A82A73A 26A38A27A4 8162A648A4 02", 11);
    CHECK(seq.size() == 32);
    CHECK(seq.changes[0] == 10);
    CHECK(format_sequence(seq) == "A04A82A73A26A38A27A48162A648A402");

    CHECK(parse_sequence("0 1 2\n0", 3) == make_sequence(3, {0, 1, 2, 0}));
    CHECK_THROWS_AS(parse_sequence("3", 3), parse_error);
    CHECK_THROWS_AS(parse_sequence("0?1", 3), parse_error);

    try {
        parse_sequence("01\n0x", 2);
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.line == 2);
        CHECK(e.column == 2);
    }
}

TEST_CASE("format/parse round-trip") {
    std::mt19937 rng(7);
    for (int t = 0; t < 1000; ++t) {
        int d = 1 + static_cast<int>(rng() % 36);
        TransitionSequence s{d, {}};
        int len = static_cast<int>(rng() % 50);
        for (int i = 0; i < len; ++i)
            s.changes.push_back(static_cast<std::uint8_t>(rng() % static_cast<unsigned>(d)));
        CHECK(parse_sequence(format_sequence(s), d) == s);
    }
}

TEST_CASE("coil closure parity") {
    auto closed = make_sequence(4, {0, 1, 0, 1});
    CHECK(closes(closed));
    CHECK(parity_mask(closed) == 0);
    auto open = make_sequence(4, {0, 1, 2});
    CHECK(!closes(open));
}
