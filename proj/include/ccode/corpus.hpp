#pragma once
// Embedded corpus of published record sequences. Every entry verifies at its
// stated parameters on every build; entries stored as initial sequence plus
// permutation are expanded on load.

#include <optional>
#include <string>
#include <vector>

#include "ccode/perms.hpp"
#include "ccode/types.hpp"

namespace ccode {

struct CorpusEntry {
    std::string id;
    int d = 0;
    int k = 0;
    Kind kind = Kind::coil;
    int expected_n = 0;
    std::string note;
    // Structural form, when the entry is given as initial sequence + permutation.
    std::string initial;
    std::string perm;  // cycle notation
    int period = 0;
    // Full transition text (expanded from the structural form if present).
    std::string transitions;
    // Reference full text for entries that also carry one, to pin expansion
    // bit-exactness.
    std::string reference_text;
    // The source prints this entry with a defect (wrong length or a sequence
    // that does not verify); see the note. Kept as printed.
    bool source_defect = false;
    // Stated length in the source when it disagrees with the printed text.
    int stated_n = 0;
};

const std::vector<CorpusEntry>& corpus_entries();
const CorpusEntry* find_corpus(const std::string& id);

// Segment p of the result is perm^p applied to the initial sequence;
// truncation keeps changes [0, truncation] of the final segment and must cut
// at least one change.
TransitionSequence expand_permuted(const TransitionSequence& initial, const CyclePermutation& perm,
                                   int period, std::optional<int> truncation = std::nullopt);

}  // namespace ccode
