#pragma once
// Direct backtracking search for circuit codes. Partial sequences are pruned
// when any contiguous subsequence, run forward or backward and relabeled by
// first occurrence, orders strictly below the prefix itself; the survivors
// still cover one representative of every equivalence class of maximal codes.

#include <array>
#include <cstdint>
#include <functional>
#include <set>

#include "ccode/canonical.hpp"
#include "ccode/types.hpp"

namespace ccode {

enum class PruneLevel { none, subsequence };

struct SearchConfig {
    int d = 2;
    int k = 2;
    Kind kind = Kind::coil;
    PruneLevel prune = PruneLevel::subsequence;
    std::uint64_t max_nodes = 0;  // 0 = unlimited
    int min_report_length = 0;    // codes below this length are not emitted
    bool collect_all_classes = false;  // keep canonical keys of every code found
    int split_depth = 0;          // subtree parallelism (0 = off)
    int tasks = 1;
    bool reverse_order = false;   // candidate order flip, for determinism checks
};

struct DirectSummary {
    int max_len = 0;
    std::set<CanonicalKey> max_classes;  // canonical classes at max_len
    std::set<CanonicalKey> all_classes;  // when collect_all_classes is set
    std::uint64_t nodes = 0;
    std::uint64_t found = 0;  // closures (coil) or recorded snakes
    bool complete = true;
};

using DirectSink = std::function<void(const Code&)>;

DirectSummary direct_search(const SearchConfig& cfg, const DirectSink& sink = nullptr);

// Standalone form of the subsequence-renumbering test; true when the prefix
// survives. Monotone: extensions of a rejected prefix are rejected.
bool prune_check(const TransitionSequence& prefix);

// Incremental pruner used inside the search; output-equivalent to running
// prune_check on every prefix.
class SequencePruner {
public:
    explicit SequencePruner(int dim);
    // Appends the change; returns whether the extended prefix survives.
    bool push(int change);
    void pop();
    int size() const { return static_cast<int>(seq_.size()); }

private:
    struct SuffixState {
        std::array<std::int8_t, kMaxSymbolDim> map;
        std::int8_t next = 0;
        bool active = true;
    };
    struct Undo {
        std::vector<std::uint32_t> deactivated;
        std::vector<std::uint32_t> newly_mapped;  // suffix index; map[seq back] assigned
        bool rejected = false;
    };

    int dim_;
    std::vector<std::uint8_t> seq_;
    std::vector<SuffixState> suffixes_;
    std::vector<Undo> undo_;
    int rejected_depth_ = -1;  // first depth at which the prefix was rejected
};

}  // namespace ccode
