#pragma once
// Spread-k verification. verify_spread is the deliberately plain O(N^2)
// pairwise reference; SpreadChecker is the incremental push/pop form the
// searches are built on.

#include <optional>
#include <vector>

#include "ccode/types.hpp"

namespace ccode {

struct SpreadViolation {
    int i = 0;      // earlier position
    int j = 0;      // later position (or -1 for closure/structure failures)
    int dist = 0;   // Hamming distance observed
    int required = 0;
    std::string what;  // empty for a plain pair violation
};

struct SpreadReport {
    bool ok = false;
    std::optional<SpreadViolation> violation;
    explicit operator bool() const { return ok; }
};

// Reference check of the spread condition.
//  coil:  closure (x_N = x_0), no repeated edge (N != 2, no equal consecutive
//         changes including wraparound), and D(x_i, x_j) >= min(k, j-i, N+i-j)
//         over the circuit vertices x_0..x_{N-1};
//  snake: D(x_i, x_j) >= min(k, j-i) over x_0..x_N (no wraparound term).
// Reports the first violation in (i, j) order.
SpreadReport verify_spread(Kind kind, int d, int k, const TransitionSequence& seq);

Code make_verified_code(Kind kind, int d, int k, const TransitionSequence& seq);

// Incremental checker with exact undo. kind selects what push guards:
//  snake: valid() is exactly verify_spread of the prefix as a snake.
//  coil:  valid() is a sound viability bound for prefixes of coils (it never
//         rejects a prefix of a valid coil; the wraparound term of a future
//         closure is bounded below by i+1). close_ok() is always exact.
class SpreadChecker {
public:
    SpreadChecker(Kind kind, int d, int k);

    // Appends the change and returns whether the prefix is still valid for
    // `kind`. Invalid pushes stay on the stack until popped.
    bool push(int change);
    void pop();

    bool valid() const { return invalid_pushes_ == 0; }
    // The current prefix, taken as a complete transition sequence, is a valid
    // spread-k coil.
    bool close_ok() const;

    int size() const { return static_cast<int>(seq_.size()); }
    bits_t head() const { return verts_.back(); }
    const std::vector<bits_t>& vertices() const { return verts_; }
    TransitionSequence sequence() const { return TransitionSequence{d_, seq_}; }

private:
    bool check_new(bits_t v) const;

    Kind kind_;
    int d_;
    int k_;
    std::vector<bits_t> verts_;
    std::vector<std::uint8_t> seq_;
    std::vector<std::uint8_t> push_ok_;
    int invalid_pushes_ = 0;
};

}  // namespace ccode
