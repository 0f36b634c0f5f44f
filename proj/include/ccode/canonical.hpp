#pragma once
// Canonical forms for transition sequences: renumbering by first occurrence,
// least representatives of paths and circuits, and inversion classification
// of coils.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ccode/types.hpp"

namespace ccode {

enum class KeyKind : std::uint8_t { path = 0, circuit = 1, chain = 2 };

// Equal keys <=> equivalent objects under the relevant symmetry group.
// Serialized as kind, dim, length-prefixed payload; hex form is used in
// result records and dedup files.
struct CanonicalKey {
    KeyKind kind = KeyKind::path;
    int dim = 0;
    std::vector<std::uint8_t> data;

    friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
    std::string hex() const;
};

// Coordinates renamed in order of first appearance; unused coordinates take
// the remaining labels in increasing order.
TransitionSequence relabel_first_occurrence(const TransitionSequence& seq);

// min of the relabeled sequence and its relabeled reversal.
CanonicalKey canonical_path(const TransitionSequence& seq);

// min over all rotations, both directions, each relabeled; requires a closing
// sequence. Invariant under rotation, reversal, and coordinate renaming.
CanonicalKey canonical_circuit(const TransitionSequence& seq);

// The sequence the circuit key represents, usable for display.
TransitionSequence canonical_circuit_sequence(const TransitionSequence& seq);

struct InversionClass {
    bool invertible = false;
    bool vertex_fixed = false;
    bool change_fixed = false;
};

// A coil is invertible when some rotation s and coordinate permutation tau
// align the reversed traversal with the forward one:
//   tau(c_{(s-1-i) mod N}) = c_i  for all i.
// The position reflection i -> (s-i) mod N then fixes two antipodal vertices
// when s is even and two changes when s is odd; all achieved parities are
// reported.
InversionClass classify_inversion(const Code& coil);

// Successful alignment offsets (values of s above); exposed for the tests
// that rederive the parity rule by explicit fixed-point counting.
std::vector<int> inversion_alignments(const TransitionSequence& seq);

// The coordinate permutation completing alignment s, if one exists.
std::optional<std::vector<int>> inversion_permutation(const TransitionSequence& seq, int s);

}  // namespace ccode
