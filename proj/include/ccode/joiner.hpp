#pragma once
// Joining two d-snakes into a (d+1)-snake or (d+1)-coil: the combined
// sequence is (b, d, sigma(c)) or (b, d, sigma(c), d), searching coordinate
// permutations sigma of the second sequence lazily, one image at a time.

#include <cstdint>
#include <functional>
#include <vector>

#include "ccode/types.hpp"

namespace ccode {

struct JoinTask {
    Code first;   // fixed frame, never permuted
    Code second;  // permuted by sigma
    Kind target = Kind::coil;
    int spread = 2;
};

// Validates that both inputs are verified snakes of matching dimension and
// spread.
JoinTask make_join_task(const Code& first, const Code& second, Kind target, int spread);

struct JoinLimits {
    std::uint64_t max_nodes = 0;  // assignment attempts (0 = none)
    bool identity_only = false;   // restrict sigma to the identity
};

struct JoinStats {
    std::uint64_t nodes = 0;
    bool complete = true;
    std::uint64_t hits = 0;
};

struct JoinHit {
    Code code;                  // dimension d+1
    std::vector<int> sigma;     // full permutation applied to `second`
};

using JoinSink = std::function<void(const JoinHit&)>;

// Emits every permutation (within limits) whose combination is valid; each
// result is re-verified at dimension d+1 before emission.
JoinStats join(const JoinTask& task, const JoinLimits& limits, const JoinSink& sink);

// Lazily grown injective map on [0, d), the assignment state of the search.
class PartialPermutation {
public:
    explicit PartialPermutation(int dim);

    bool assigned(int coord) const { return map_[static_cast<std::size_t>(coord)] >= 0; }
    int image(int coord) const { return map_[static_cast<std::size_t>(coord)]; }
    // Unused images in increasing order; throws if coord is already assigned.
    std::vector<int> candidates(int coord) const;
    void assign(int coord, int image);
    void unassign(int coord);
    // Extension to a full permutation, unused coordinates filled in order.
    std::vector<int> completed() const;

private:
    std::vector<int> map_;
    std::vector<char> used_;
};

}  // namespace ccode
