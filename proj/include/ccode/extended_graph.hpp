#pragma once
// The extended graph: 2^d original vertices plus 2d coordinate vertices, with
// optional sequence edges between originals. Canonicalization and orbit
// computation run by brute force over the 2^d * d! hypercube automorphisms,
// which correspond exactly to the automorphisms of the extended graph.

#include <cstdint>
#include <vector>

#include "ccode/canonical.hpp"
#include "ccode/types.hpp"

namespace ccode {

// Exhaustive automorphism enumeration stays practical through d = 7
// (645,120 automorphisms).
inline constexpr int kMaxExtendedDim = 7;

struct ExtendedGraph {
    int dim = 0;
    // Sequence edges between original vertices, one per consecutive chain
    // pair; kept as pushed (duplicates allowed, ends normalized u <= v).
    std::vector<std::pair<bits_t, bits_t>> seq_edges;

    std::size_t original_count() const { return std::size_t{1} << dim; }
    std::size_t coordinate_count() const { return 2 * static_cast<std::size_t>(dim); }
    std::size_t vertex_count() const { return original_count() + coordinate_count(); }
    // Original-to-coordinate edges plus the d pair edges.
    std::size_t fixed_edge_count() const {
        return static_cast<std::size_t>(dim) * original_count() + static_cast<std::size_t>(dim);
    }
    // Vertex ids: originals are [0, 2^d); coordinate vertex (i, b) is
    // 2^d + 2i + b.
    std::uint32_t coordinate_vertex(int coord, int value) const {
        return static_cast<std::uint32_t>(original_count()) +
               2 * static_cast<std::uint32_t>(coord) + static_cast<std::uint32_t>(value);
    }
    std::vector<std::pair<std::uint32_t, std::uint32_t>> fixed_edges() const;
};

// Chains need not be hypercube-adjacent.
ExtendedGraph build_extended_graph(int d, const std::vector<std::vector<Vertex>>& chains);
ExtendedGraph extended_graph_of(const Code& code);

// Least image of the sequence-edge multiset over all hypercube automorphisms;
// equal keys iff the embedded chains are equivalent up to automorphism.
CanonicalKey canonical_extended(const ExtendedGraph& g);

// Orbits of the original vertices under the automorphisms preserving the
// sequence edges; orbits sorted by least member.
std::vector<std::vector<bits_t>> symmetry_orbits(const ExtendedGraph& g);

}  // namespace ccode
