#include "ccode/extended_graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "ccode/perms.hpp"

namespace ccode {

namespace {

void require_feasible(const ExtendedGraph& g) {
    if (g.dim > kMaxExtendedDim)
        throw std::runtime_error("extended-graph operations are limited to d <= " +
                                 std::to_string(kMaxExtendedDim) +
                                 " (exhaustive automorphism strategy)");
}

// Image of v under the automorphism: translate, then permute coordinates.
bits_t apply_auto(const std::vector<int>& sigma, bits_t flip, bits_t v) {
    bits_t x = v ^ flip;
    bits_t out = 0;
    while (x) {
        int i = std::countr_zero(x);
        x &= x - 1;
        out |= bits_t{1} << sigma[static_cast<std::size_t>(i)];
    }
    return out;
}

std::vector<std::uint32_t> edge_image(const std::vector<std::pair<bits_t, bits_t>>& edges,
                                      const std::vector<int>& sigma, bits_t flip) {
    std::vector<std::uint32_t> out;
    out.reserve(edges.size());
    for (const auto& [u, v] : edges) {
        bits_t a = apply_auto(sigma, flip, u);
        bits_t b = apply_auto(sigma, flip, v);
        if (a > b) std::swap(a, b);
        out.push_back((a << 16) | b);
    }
    std::sort(out.begin(), out.end());
    return out;
}

template <typename Fn>
void for_each_automorphism(int d, Fn&& fn) {
    std::vector<int> sigma(static_cast<std::size_t>(d));
    std::iota(sigma.begin(), sigma.end(), 0);
    const bits_t flips = bits_t{1} << d;
    do {
        for (bits_t f = 0; f < flips; ++f) fn(sigma, f);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
}

}  // namespace

std::vector<std::pair<std::uint32_t, std::uint32_t>> ExtendedGraph::fixed_edges() const {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    out.reserve(fixed_edge_count());
    for (bits_t v = 0; v < original_count(); ++v)
        for (int i = 0; i < dim; ++i)
            out.emplace_back(static_cast<std::uint32_t>(v),
                             coordinate_vertex(i, static_cast<int>((v >> i) & 1u)));
    for (int i = 0; i < dim; ++i)
        out.emplace_back(coordinate_vertex(i, 0), coordinate_vertex(i, 1));
    return out;
}

ExtendedGraph build_extended_graph(int d, const std::vector<std::vector<Vertex>>& chains) {
    if (d < 1 || d > kMaxVertexDim) throw std::invalid_argument("dimension out of range");
    ExtendedGraph g;
    g.dim = d;
    for (const auto& chain : chains) {
        for (const auto& v : chain)
            if (v.dim != d) throw std::invalid_argument("chain vertex dimension mismatch");
        for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
            bits_t a = chain[i].bits, b = chain[i + 1].bits;
            if (a > b) std::swap(a, b);
            g.seq_edges.emplace_back(a, b);
        }
    }
    return g;
}

ExtendedGraph extended_graph_of(const Code& code) {
    auto path = walk(Vertex{0, code.dim}, code.seq);
    // For a coil the walk already returns to its start, closing the chain.
    return build_extended_graph(code.dim, {path});
}

CanonicalKey canonical_extended(const ExtendedGraph& g) {
    require_feasible(g);
    std::vector<std::uint32_t> best;
    bool have = false;
    for_each_automorphism(g.dim, [&](const std::vector<int>& sigma, bits_t flip) {
        auto img = edge_image(g.seq_edges, sigma, flip);
        if (!have || img < best) {
            best = std::move(img);
            have = true;
        }
    });
    CanonicalKey key;
    key.kind = KeyKind::chain;
    key.dim = g.dim;
    key.data.push_back(static_cast<std::uint8_t>(KeyKind::chain));
    key.data.push_back(static_cast<std::uint8_t>(g.dim));
    key.data.push_back(static_cast<std::uint8_t>(best.size() & 0xff));
    key.data.push_back(static_cast<std::uint8_t>(best.size() >> 8));
    for (auto e : best) {
        key.data.push_back(static_cast<std::uint8_t>(e >> 24));
        key.data.push_back(static_cast<std::uint8_t>(e >> 16));
        key.data.push_back(static_cast<std::uint8_t>(e >> 8));
        key.data.push_back(static_cast<std::uint8_t>(e));
    }
    return key;
}

std::vector<std::vector<bits_t>> symmetry_orbits(const ExtendedGraph& g) {
    require_feasible(g);
    const std::size_t n = g.original_count();
    std::vector<std::uint32_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::uint32_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    auto unite = [&](std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    };

    auto reference = edge_image(g.seq_edges, identity_permutation(g.dim).mapping, 0);
    for_each_automorphism(g.dim, [&](const std::vector<int>& sigma, bits_t flip) {
        if (edge_image(g.seq_edges, sigma, flip) != reference) return;
        for (bits_t v = 0; v < n; ++v) unite(static_cast<std::uint32_t>(v), apply_auto(sigma, flip, v));
    });

    std::vector<std::vector<bits_t>> orbits;
    std::vector<int> index(n, -1);
    for (bits_t v = 0; v < n; ++v) {
        auto root = find(static_cast<std::uint32_t>(v));
        if (index[root] < 0) {
            index[root] = static_cast<int>(orbits.size());
            orbits.emplace_back();
        }
        orbits[static_cast<std::size_t>(index[root])].push_back(v);
    }
    return orbits;
}

}  // namespace ccode
