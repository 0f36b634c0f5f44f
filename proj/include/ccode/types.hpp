#pragma once
// Core types for hypercube circuit codes: vertices as single-word bit masks,
// transition sequences, and the text format used throughout the tools.

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ccode {

// A vertex of I^d is a d-bit mask; bit i is coordinate i.
using bits_t = std::uint32_t;

inline constexpr int kMaxVertexDim = 32;  // single-word vertex ops
inline constexpr int kMaxSymbolDim = 36;  // text symbols '0'-'9' then 'A'-'Z'

enum class Kind { snake, coil };

const char* kind_name(Kind k);
Kind parse_kind(const std::string& s);  // "snake" | "coil"

struct Vertex {
    bits_t bits = 0;
    int dim = 0;

    friend bool operator==(const Vertex&, const Vertex&) = default;
};

inline Vertex make_vertex(bits_t bits, int dim) {
    if (dim < 1 || dim > kMaxVertexDim)
        throw std::invalid_argument("vertex dimension out of range");
    if (dim < kMaxVertexDim && (bits >> dim) != 0)
        throw std::invalid_argument("vertex has bits above its dimension");
    return Vertex{bits, dim};
}

inline int weight(bits_t v) { return std::popcount(v); }

// Hamming distance D(a, b); the dimensions must agree.
int hamming(const Vertex& a, const Vertex& b);

// Coordinate-tuple rendering, e.g. (0,1,1,0,0,0); coordinate 0 first.
std::string vertex_tuple(const Vertex& v);
// Plain bit string, coordinate 0 first: "011000".
std::string vertex_bits_string(const Vertex& v);
Vertex parse_vertex_bits(const std::string& text, int dim);

struct TransitionSequence {
    int dim = 0;
    std::vector<std::uint8_t> changes;

    std::size_t size() const { return changes.size(); }
    bool empty() const { return changes.empty(); }

    friend bool operator==(const TransitionSequence&, const TransitionSequence&) = default;
};

TransitionSequence make_sequence(int dim, std::vector<std::uint8_t> changes);
TransitionSequence make_sequence(int dim, std::initializer_list<int> changes);

// XOR of e_c over the sequence; for a closed circuit this is zero.
bits_t parity_mask(const TransitionSequence& seq);
bool closes(const TransitionSequence& seq);

TransitionSequence reversed(const TransitionSequence& seq);
TransitionSequence rotated(const TransitionSequence& seq, std::size_t offset);
TransitionSequence concat(const TransitionSequence& a, const TransitionSequence& b);

// Walk x_0 = start, x_{i+1} = x_i ^ e_{c_i}; returns all N+1 vertices.
std::vector<Vertex> walk(const Vertex& start, const TransitionSequence& seq);
Vertex walk_end(const Vertex& start, const TransitionSequence& seq);

// Text format: one symbol per change, '0'-'9' then 'A'-'Z' (10-35), no
// separators on output; whitespace and line breaks are ignored on input.
struct parse_error : std::runtime_error {
    int line;
    int column;
    parse_error(const std::string& what, int line_, int col_)
        : std::runtime_error(what), line(line_), column(col_) {}
};

char change_symbol(int change);
int symbol_change(char c);  // -1 if not a coordinate symbol

TransitionSequence parse_sequence(const std::string& text, int dim);
std::string format_sequence(const TransitionSequence& seq);

// A verified code. Use make_verified_code (spread.hpp) to construct one with
// the invariants checked.
struct Code {
    Kind kind = Kind::coil;
    int dim = 0;
    int spread = 0;
    TransitionSequence seq;

    int length() const { return static_cast<int>(seq.size()); }
};

}  // namespace ccode
