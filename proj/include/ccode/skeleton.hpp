#pragma once
// Skeletons: the chain of leap vectors and segment start vertices determined
// by a permutation and an initial leap. A skeleton fixes the period P of any
// permuted code built on it.

#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "ccode/perms.hpp"
#include "ccode/types.hpp"

namespace ccode {

struct Skeleton {
    CyclePermutation perm;
    bits_t leap0 = 0;
    std::vector<bits_t> leaps;   // leaps[p] = pi^p(leap0), p in [0, P)
    std::vector<bits_t> starts;  // starts[0] = 0, starts[p+1] = starts[p] ^ leaps[p]
    int period = 0;
    int dim = 0;
};

enum class SkeletonPrune {
    none,    // reject only degenerate chains
    strict,  // additionally require pairwise distance >= k among starts
             // (assumes the eventual initial sequence has length >= k)
};

enum class SkeletonReject {
    none,
    zero_leap,     // leap 0 revisits the origin immediately (P = 1)
    start_repeat,  // a nonzero start vertex recurred before closure
    spread_pruned, // strict policy: two starts closer than k
};

struct SkeletonResult {
    std::optional<Skeleton> skeleton;
    SkeletonReject reject = SkeletonReject::none;
    explicit operator bool() const { return skeleton.has_value(); }
};

SkeletonResult derive_skeleton(const CyclePermutation& perm, bits_t leap0, int k,
                               SkeletonPrune policy = SkeletonPrune::none);

// Dedup of initial leaps within one permutation, up to the centralizer of pi.
class SkeletonDedup {
public:
    // True when the skeleton's leap orbit was not seen before (and records it).
    bool insert(const Skeleton& s);
    bool would_dup(const Skeleton& s) const;
    std::size_t size() const { return seen_.size(); }

private:
    std::unordered_set<std::string> seen_;
};

}  // namespace ccode
