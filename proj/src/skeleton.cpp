#include "ccode/skeleton.hpp"

#include <bit>

namespace ccode {

SkeletonResult derive_skeleton(const CyclePermutation& perm, bits_t leap0, int k,
                               SkeletonPrune policy) {
    if (k < 1) throw std::invalid_argument("spread must be at least 1");
    if (perm.dim < 1 || perm.dim > kMaxVertexDim)
        throw std::invalid_argument("dimension out of range");
    SkeletonResult result;
    if (leap0 == 0) {
        result.reject = SkeletonReject::zero_leap;
        return result;
    }

    Skeleton s;
    s.perm = perm;
    s.leap0 = leap0;
    s.dim = perm.dim;
    s.starts.push_back(0);

    std::unordered_set<bits_t> seen{0};
    bits_t leap = leap0;
    bits_t at = 0;
    // The chain closes within 2*ord(pi) steps: a nonzero start can only recur
    // after a closure, so the loop below always terminates at the first zero.
    const int cap = 2 * perm.order() + 1;
    for (int p = 0; p < cap; ++p) {
        s.leaps.push_back(leap);
        at ^= leap;
        if (at == 0) {
            s.period = p + 1;
            break;
        }
        if (!seen.insert(at).second) {
            result.reject = SkeletonReject::start_repeat;
            return result;
        }
        s.starts.push_back(at);
        leap = perm.apply_bits(leap);
    }
    if (s.period == 0) {
        result.reject = SkeletonReject::start_repeat;
        return result;
    }

    if (policy == SkeletonPrune::strict) {
        for (std::size_t i = 0; i < s.starts.size(); ++i)
            for (std::size_t j = i + 1; j < s.starts.size(); ++j)
                if (std::popcount(s.starts[i] ^ s.starts[j]) < k) {
                    result.reject = SkeletonReject::spread_pruned;
                    return result;
                }
    }

    result.skeleton = std::move(s);
    return result;
}

bool SkeletonDedup::insert(const Skeleton& s) {
    return seen_.insert(leap_orbit_key(s.perm, s.leap0)).second;
}

bool SkeletonDedup::would_dup(const Skeleton& s) const {
    return seen_.contains(leap_orbit_key(s.perm, s.leap0));
}

}  // namespace ccode
