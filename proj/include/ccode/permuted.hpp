#pragma once
// The permuted-code construction: backtracking over initial sequences whose
// permuted copies simultaneously satisfy the spread condition, plus the
// period-2 natural-coil specialization, the closed-form codes, and the
// truncated variant.

#include <cstdint>
#include <functional>
#include <optional>

#include "ccode/skeleton.hpp"
#include "ccode/spread.hpp"
#include "ccode/types.hpp"

namespace ccode {

struct PermutedHit {
    Code code;
    CyclePermutation perm;
    TransitionSequence initial;
    int period = 0;                  // segments used, including a partial one
    std::optional<int> truncation;   // last change index i < L-1 of the
                                     // partial segment, when truncated
    bits_t leap0 = 0;
};

using PermutedSink = std::function<void(const PermutedHit&)>;

struct PermutedLimits {
    int max_len = 0;              // cap on initial-sequence length L (0 = none)
    std::uint64_t max_nodes = 0;  // proposal budget (0 = none)
    bool emit_all = false;        // default: first-found longest per search
};

struct PermutedStats {
    std::uint64_t nodes = 0;
    bool complete = true;  // false when the node budget cut the search short
    int best_n = 0;
    std::uint64_t hits = 0;
};

// Exhaustive (within limits) search for initial sequences on the skeleton;
// every emitted code is re-verified against the pairwise reference.
PermutedStats search_initial(const Skeleton& s, int k, const PermutedLimits& limits,
                             const PermutedSink& sink);

// search_initial plus codes whose final permuted segment is truncated.
PermutedStats search_truncated(const Skeleton& s, int k, const PermutedLimits& limits,
                               const PermutedSink& sink);

// Period-2 natural coils (identity permutation): the transition sequence is
// an initial sequence repeated once, unchanged.
PermutedStats search_natural(int d, int k, const PermutedLimits& limits,
                             const PermutedSink& sink);

enum class SpecialKind {
    spread_d,        // (0, 1, ..., d-1) twice: length 2d, spread d
    neighbors_coil,  // initial (1, 0), pi: i -> i+1 mod d: the 2d-coil holding
                     // all d neighbors of a vertex
};

Code construct_special(SpecialKind kind, int d);

}  // namespace ccode
