#include "ccode/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "ccode/perms.hpp"
#include "ccode/spread.hpp"
#include "doctest.h"

using namespace ccode;

namespace {

TransitionSequence random_closing_sequence(std::mt19937& rng, int d, int max_half) {
    TransitionSequence s{d, {}};
    int len = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_half));
    for (int i = 0; i < len; ++i)
        s.changes.push_back(static_cast<std::uint8_t>(rng() % static_cast<unsigned>(d)));
    // Append the coordinates of odd count, in random order, to close.
    std::vector<std::uint8_t> odd;
    bits_t parity = parity_mask(s);
    for (int c = 0; c < d; ++c)
        if ((parity >> c) & 1u) odd.push_back(static_cast<std::uint8_t>(c));
    std::shuffle(odd.begin(), odd.end(), rng);
    for (auto c : odd) s.changes.push_back(c);
    return s;
}

std::vector<int> random_perm(std::mt19937& rng, int d) {
    std::vector<int> p(static_cast<std::size_t>(d));
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

}  // namespace

TEST_CASE("relabel by first occurrence") {
    CHECK(relabel_first_occurrence(make_sequence(3, {2, 0, 2, 1})) ==
          make_sequence(3, {0, 1, 0, 2}));
    CHECK(relabel_first_occurrence(make_sequence(3, {0, 1, 2, 0})) ==
          make_sequence(3, {0, 1, 2, 0}));
    CHECK(relabel_first_occurrence(make_sequence(6, {5, 5, 3})) == make_sequence(6, {0, 0, 1}));
}

TEST_CASE("relabel output shape") {
    std::mt19937 rng(17);
    for (int t = 0; t < 2000; ++t) {
        int d = 1 + static_cast<int>(rng() % 7);
        TransitionSequence s{d, {}};
        int len = 1 + static_cast<int>(rng() % 20);
        for (int i = 0; i < len; ++i)
            s.changes.push_back(static_cast<std::uint8_t>(rng() % static_cast<unsigned>(d)));
        auto r = relabel_first_occurrence(s);
        CHECK(r.changes[0] == 0);
        int seen_max = -1;
        for (auto c : r.changes) {
            CHECK(static_cast<int>(c) <= seen_max + 1);
            seen_max = std::max(seen_max, static_cast<int>(c));
        }
    }
}

TEST_CASE("canonical_path examples") {
    CHECK(canonical_path(make_sequence(2, {1, 0})) == canonical_path(make_sequence(2, {0, 1})));
    CHECK(canonical_path(make_sequence(2, {0, 1, 0})) ==
          canonical_path(make_sequence(2, {0, 1, 0})));
    CHECK(canonical_path(make_sequence(3, {0, 1, 2})) == canonical_path(make_sequence(3, {2, 1, 0})));
    // Distinct paths get distinct keys.
    CHECK(canonical_path(make_sequence(3, {0, 1, 2})) != canonical_path(make_sequence(3, {0, 1, 0})));
}

TEST_CASE("canonical_circuit basics") {
    auto key = canonical_circuit(parse_sequence("0101", 2));
    CHECK(key.dim == 2);
    // The canonical representative of the 4-cycle is itself.
    CHECK(canonical_circuit_sequence(parse_sequence("0101", 2)) == parse_sequence("0101", 2));
    CHECK_THROWS_AS(canonical_circuit(parse_sequence("012", 3)), std::invalid_argument);

    // Rotation invariance at equal dim: the 4-cycle pattern embedded in d=3.
    auto base = make_sequence(3, {1, 2, 1, 2});
    for (std::size_t r = 0; r < 4; ++r)
        CHECK(canonical_circuit(rotated(base, r)) == canonical_circuit(base));
}

TEST_CASE("canonical_circuit is invariant under the full symmetry group") {
    std::mt19937 rng(2718);
    int checked = 0;
    while (checked < 12000) {
        int d = 2 + static_cast<int>(rng() % 6);  // up to 7
        auto s = random_closing_sequence(rng, d, 14);
        if (s.empty()) continue;
        auto key = canonical_circuit(s);
        auto t = rotated(s, rng() % s.size());
        if (rng() % 2) t = reversed(t);
        auto perm = make_permutation(random_perm(rng, d));
        t = perm.apply_seq(t);
        CHECK(canonical_circuit(t) == key);
        // Path keys: invariant under reversal and relabeling (no rotation).
        auto p = perm.apply_seq(rng() % 2 ? reversed(s) : s);
        CHECK(canonical_path(p) == canonical_path(s));
        ++checked;
    }
}

TEST_CASE("a rotated, reversed, relabeled presentation of the 26-change coil matches") {
    auto seq = parse_sequence("0120314305 2351035230 420135", 6);
    REQUIRE(seq.size() == 26);
    auto key = canonical_circuit(seq);
    auto other = reversed(rotated(seq, 11));
    other = make_permutation({3, 5, 0, 2, 4, 1}).apply_seq(other);
    CHECK(canonical_circuit(other) == key);
    CHECK(canonical_circuit_sequence(other) == canonical_circuit_sequence(seq));
}

TEST_CASE("key hex serialization") {
    auto key = canonical_circuit(parse_sequence("0101", 2));
    auto hex = key.hex();
    CHECK(hex.size() == key.data.size() * 2);
    for (char c : hex) CHECK(((c >= '0' && c <= '9') || (c >= 'a' && c <= 'f')));
}

namespace {

Code coil_of(const std::string& text, int d, int k = 2) {
    return make_verified_code(Kind::coil, d, k, parse_sequence(text, d));
}

// Count fixed vertices and fixed edges of the explicit reversing automorphism
// phi(v) = tau(v) ^ x_s, which sends x_i to x_{(s-i) mod N}.
struct FixCount {
    int vertices = 0;
    int edges = 0;
};

FixCount count_fixed(const Code& coil, int s) {
    auto tau_map = inversion_permutation(coil.seq, s);
    REQUIRE(tau_map.has_value());
    auto tau = make_permutation(*tau_map);
    auto path = walk(Vertex{0, coil.dim}, coil.seq);
    const int n = coil.length();
    // phi must realize the position reflection i -> (s - i) mod N.
    bits_t t = path[static_cast<std::size_t>(((s % n) + n) % n)].bits;
    for (int i = 0; i < n; ++i) {
        bits_t img = tau.apply_bits(path[static_cast<std::size_t>(i)].bits) ^ t;
        int j = ((s - i) % n + n) % n;
        REQUIRE(img == path[static_cast<std::size_t>(j)].bits);
    }
    FixCount out;
    for (int i = 0; i < n; ++i) {
        if (((s - i) % n + n) % n == i) ++out.vertices;
        if (((s - 1 - i) % n + n) % n == i) ++out.edges;
    }
    return out;
}

}  // namespace

TEST_CASE("inversion classification of the three longest 5-coils") {
    auto vf = coil_of("01231421023124", 5);
    auto nat = coil_of("01230420123042", 5);
    auto cf = coil_of("01203240123024", 5);

    auto cvf = classify_inversion(vf);
    CHECK(cvf.invertible);
    CHECK(cvf.vertex_fixed);
    CHECK_FALSE(cvf.change_fixed);

    auto cnat = classify_inversion(nat);
    CHECK(cnat.invertible);
    CHECK(cnat.vertex_fixed);
    CHECK_FALSE(cnat.change_fixed);

    auto ccf = classify_inversion(cf);
    CHECK(ccf.invertible);
    CHECK(ccf.change_fixed);
    CHECK_FALSE(ccf.vertex_fixed);

    // The vertex-fixed alignment of the first coil uses tau = (04)(12)3 at s=0.
    auto tau = inversion_permutation(vf.seq, 0);
    REQUIRE(tau.has_value());
    CHECK(*tau == std::vector<int>{4, 2, 1, 3, 0});
}

TEST_CASE("alignment parity rule by explicit fixed-point counting") {
    for (const auto* text : {"01231421023124", "01230420123042", "01203240123024"}) {
        auto coil = coil_of(text, 5);
        auto alignments = inversion_alignments(coil.seq);
        REQUIRE(!alignments.empty());
        for (int s : alignments) {
            auto fixes = count_fixed(coil, s);
            if (s % 2 == 0) {
                CHECK(fixes.vertices == 2);
                CHECK(fixes.edges == 0);
            } else {
                CHECK(fixes.vertices == 0);
                CHECK(fixes.edges == 2);
            }
        }
    }
}

TEST_CASE("the doubled straight coil has both inversion types") {
    auto coil = coil_of("01230123", 4, 2);
    auto cls = classify_inversion(coil);
    CHECK(cls.invertible);
    CHECK(cls.vertex_fixed);
    CHECK(cls.change_fixed);
}

TEST_CASE("classification is invariant under rotation and relabeling") {
    std::mt19937 rng(424242);
    auto base = coil_of("01231421023124", 5);
    for (int t = 0; t < 200; ++t) {
        auto s = rotated(base.seq, rng() % base.seq.size());
        auto perm = make_permutation(random_perm(rng, 5));
        s = perm.apply_seq(s);
        auto cls = classify_inversion(Code{Kind::coil, 5, 2, s});
        CHECK(cls.invertible);
        CHECK(cls.vertex_fixed);
        CHECK_FALSE(cls.change_fixed);
    }
}

TEST_CASE("classify_inversion rejects non-coils") {
    Code snake{Kind::snake, 3, 2, make_sequence(3, {0, 1, 2})};
    CHECK_THROWS_AS(classify_inversion(snake), std::invalid_argument);
}
