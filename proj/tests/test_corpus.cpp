#include "ccode/corpus.hpp"

#include "ccode/canonical.hpp"
#include "ccode/spread.hpp"
#include "doctest.h"

using namespace ccode;

TEST_CASE("corpus entries verify at their stated parameters") {
    const auto& entries = corpus_entries();
    REQUIRE(entries.size() == 12);
    for (const auto& e : entries) {
        CAPTURE(e.id);
        auto seq = parse_sequence(e.transitions, e.d);
        if (e.source_defect) continue;  // pinned separately below
        CHECK(static_cast<int>(seq.size()) == e.expected_n);
        CHECK(verify_spread(e.kind, e.d, e.k, seq).ok);
    }
}

TEST_CASE("defective source entries stay exactly as documented") {
    // The spread-3 d=9 entry is printed corrupt: it must keep failing.
    const auto* bad9 = find_corpus("coil-s3-d9-n58");
    REQUIRE(bad9);
    CHECK(bad9->source_defect);
    auto seq9 = parse_sequence(bad9->transitions, 9);
    CHECK(static_cast<int>(seq9.size()) == 58);
    CHECK_FALSE(verify_spread(Kind::coil, 9, 3, seq9).ok);
    CHECK_FALSE(verify_spread(Kind::coil, 9, 2, seq9).ok);

    // The spread-6 d=13 entry prints 48 changes against a stated 50; the
    // printed text is a valid spread-6 coil of length 48.
    const auto* d13 = find_corpus("coil-s6-d13-n50");
    REQUIRE(d13);
    CHECK(d13->source_defect);
    CHECK(d13->stated_n == 50);
    auto seq13 = parse_sequence(d13->transitions, 13);
    CHECK(static_cast<int>(seq13.size()) == 48);
    CHECK(d13->expected_n == 48);
    CHECK(verify_spread(Kind::coil, 13, 6, seq13).ok);
}

TEST_CASE("expansion reproduces the printed full sequences bit-exactly") {
    for (const char* id : {"coil-s2-d10-n348", "coil-s2-d11-n640"}) {
        const auto* e = find_corpus(id);
        REQUIRE(e);
        REQUIRE_FALSE(e->reference_text.empty());
        CHECK(e->transitions == e->reference_text);
    }
}

TEST_CASE("structural entries expand to their stated lengths") {
    for (const auto& e : corpus_entries()) {
        if (e.initial.empty()) continue;
        auto initial = parse_sequence(e.initial, e.d);
        auto perm = parse_permutation(e.perm, e.d);
        auto seq = expand_permuted(initial, perm, e.period);
        CHECK(static_cast<int>(seq.size()) ==
              static_cast<int>(initial.size()) * e.period);
        CHECK(format_sequence(seq) == e.transitions);
    }
}

TEST_CASE("the natural 8-coil repeats its first half unchanged") {
    const auto* e = find_corpus("coil-s2-d8-n94");
    REQUIRE(e);
    auto seq = parse_sequence(e->transitions, 8);
    REQUIRE(seq.size() == 94);
    for (int i = 0; i < 47; ++i)
        CHECK(seq.changes[static_cast<std::size_t>(i)] ==
              seq.changes[static_cast<std::size_t>(i + 47)]);
}

TEST_CASE("no long corpus coil is invertible") {
    for (const char* id : {"coil-s2-d10-n348", "coil-s2-d11-n638", "coil-s2-d11-n640",
                           "coil-s2-d8-n94", "coil-s2-d9-n188", "coil-s3-d10-n100",
                           "coil-s3-d11-n160a", "coil-s3-d11-n160b", "coil-s5-d12-n58"}) {
        const auto* e = find_corpus(id);
        REQUIRE(e);
        auto code = make_verified_code(e->kind, e->d, e->k, parse_sequence(e->transitions, e->d));
        CAPTURE(e->id);
        CHECK_FALSE(classify_inversion(code).invertible);
    }
}

TEST_CASE("truncated expansion") {
    auto initial = make_sequence(5, {1, 0, 3});
    auto perm = representative({5});
    auto seq = expand_permuted(initial, perm, 4, 0);
    CHECK(format_sequence(seq) == "1032143204");
    CHECK(verify_spread(Kind::coil, 5, 2, seq).ok);
    CHECK_THROWS_AS(expand_permuted(initial, perm, 4, 2), std::invalid_argument);
}

TEST_CASE("unknown corpus ids return null") { CHECK(find_corpus("nope") == nullptr); }
