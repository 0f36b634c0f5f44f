#pragma once
// Coordinate permutations for the permuted-code construction: conjugacy
// representatives from integer partitions, cycle-notation I/O, and
// centralizer-orbit keys for skeleton dedup.

#include <string>
#include <vector>

#include "ccode/types.hpp"

namespace ccode {

struct CyclePermutation {
    int dim = 0;
    std::vector<int> mapping;     // one-line: mapping[i] = pi(i)
    std::vector<int> cycle_type;  // cycle lengths, descending

    int apply(int coord) const { return mapping[static_cast<std::size_t>(coord)]; }
    // Image of a vertex mask: bit pi(i) of the result is bit i of v.
    bits_t apply_bits(bits_t v) const;
    TransitionSequence apply_seq(const TransitionSequence& seq) const;

    CyclePermutation inverse() const;
    CyclePermutation compose(const CyclePermutation& then) const;  // this, then `then`
    bool is_identity() const;
    int order() const;

    friend bool operator==(const CyclePermutation&, const CyclePermutation&) = default;
};

CyclePermutation make_permutation(std::vector<int> one_line);
CyclePermutation identity_permutation(int dim);

// Cycle notation, e.g. "(123450)(786)9": parenthesized cycles plus bare fixed
// points, symbols as in the sequence text format. A bare string with no
// parentheses is read as one-line notation and must cover all d coordinates.
CyclePermutation parse_permutation(const std::string& text, int dim);
std::string permutation_cycles(const CyclePermutation& perm);

enum class PartitionOrder { reverse_lex, lex };

// All partitions of d: reverse_lex runs d, d-1+1, ..., 1^d; lex the opposite.
std::vector<std::vector<int>> partitions(int d, PartitionOrder order);

// Canonical conjugacy representative: cycles on consecutive blocks of [0, d),
// longest first.
CyclePermutation representative(const std::vector<int>& partition);

// Orbit key of a leap vector under the centralizer of perm: per cycle the
// rotation-minimal necklace of its bits, sorted within each cycle length.
// Equal keys <=> some sigma with sigma.pi = pi.sigma maps one leap to the
// other.
std::string leap_orbit_key(const CyclePermutation& perm, bits_t leap);

// Brute-force centralizer enumeration (test oracle; d <= 8).
std::vector<CyclePermutation> centralizer_brute(const CyclePermutation& perm);
bool leaps_equivalent_brute(const CyclePermutation& perm, bits_t a, bits_t b);

}  // namespace ccode
