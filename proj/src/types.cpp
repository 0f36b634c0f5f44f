#include "ccode/types.hpp"

#include <cctype>

namespace ccode {

const char* kind_name(Kind k) { return k == Kind::snake ? "snake" : "coil"; }

Kind parse_kind(const std::string& s) {
    if (s == "snake") return Kind::snake;
    if (s == "coil") return Kind::coil;
    throw std::invalid_argument("unknown kind: " + s);
}

int hamming(const Vertex& a, const Vertex& b) {
    if (a.dim != b.dim)
        throw std::invalid_argument("hamming: dimension mismatch");
    return std::popcount(a.bits ^ b.bits);
}

std::string vertex_tuple(const Vertex& v) {
    std::string out = "(";
    for (int i = 0; i < v.dim; ++i) {
        if (i) out += ',';
        out += ((v.bits >> i) & 1u) ? '1' : '0';
    }
    out += ')';
    return out;
}

std::string vertex_bits_string(const Vertex& v) {
    std::string out;
    out.reserve(static_cast<std::size_t>(v.dim));
    for (int i = 0; i < v.dim; ++i) out += ((v.bits >> i) & 1u) ? '1' : '0';
    return out;
}

Vertex parse_vertex_bits(const std::string& text, int dim) {
    if (static_cast<int>(text.size()) != dim)
        throw std::invalid_argument("bit string length does not match dimension");
    bits_t bits = 0;
    for (int i = 0; i < dim; ++i) {
        char c = text[static_cast<std::size_t>(i)];
        if (c == '1')
            bits |= bits_t{1} << i;
        else if (c != '0')
            throw std::invalid_argument("bit string must contain only 0/1");
    }
    return make_vertex(bits, dim);
}

TransitionSequence make_sequence(int dim, std::vector<std::uint8_t> changes) {
    if (dim < 1 || dim > kMaxSymbolDim)
        throw std::invalid_argument("sequence dimension out of range");
    for (auto c : changes)
        if (c >= dim) throw std::invalid_argument("change index not below dimension");
    return TransitionSequence{dim, std::move(changes)};
}

TransitionSequence make_sequence(int dim, std::initializer_list<int> changes) {
    std::vector<std::uint8_t> v;
    v.reserve(changes.size());
    for (int c : changes) {
        if (c < 0 || c >= dim) throw std::invalid_argument("change index not below dimension");
        v.push_back(static_cast<std::uint8_t>(c));
    }
    return TransitionSequence{dim, std::move(v)};
}

bits_t parity_mask(const TransitionSequence& seq) {
    bits_t m = 0;
    for (auto c : seq.changes) m ^= bits_t{1} << c;
    return m;
}

bool closes(const TransitionSequence& seq) { return parity_mask(seq) == 0; }

TransitionSequence reversed(const TransitionSequence& seq) {
    TransitionSequence out{seq.dim, {seq.changes.rbegin(), seq.changes.rend()}};
    return out;
}

TransitionSequence rotated(const TransitionSequence& seq, std::size_t offset) {
    if (seq.empty()) return seq;
    offset %= seq.size();
    TransitionSequence out{seq.dim, {}};
    out.changes.reserve(seq.size());
    out.changes.insert(out.changes.end(), seq.changes.begin() + static_cast<std::ptrdiff_t>(offset),
                       seq.changes.end());
    out.changes.insert(out.changes.end(), seq.changes.begin(),
                       seq.changes.begin() + static_cast<std::ptrdiff_t>(offset));
    return out;
}

TransitionSequence concat(const TransitionSequence& a, const TransitionSequence& b) {
    if (a.dim != b.dim) throw std::invalid_argument("concat: dimension mismatch");
    TransitionSequence out = a;
    out.changes.insert(out.changes.end(), b.changes.begin(), b.changes.end());
    return out;
}

std::vector<Vertex> walk(const Vertex& start, const TransitionSequence& seq) {
    if (start.dim != seq.dim)
        throw std::invalid_argument("walk: start dimension does not match sequence");
    std::vector<Vertex> path;
    path.reserve(seq.size() + 1);
    path.push_back(start);
    bits_t cur = start.bits;
    for (auto c : seq.changes) {
        cur ^= bits_t{1} << c;
        path.push_back(Vertex{cur, start.dim});
    }
    return path;
}

Vertex walk_end(const Vertex& start, const TransitionSequence& seq) {
    if (start.dim != seq.dim)
        throw std::invalid_argument("walk: start dimension does not match sequence");
    return Vertex{start.bits ^ parity_mask(seq), start.dim};
}

char change_symbol(int change) {
    if (change < 0 || change >= kMaxSymbolDim)
        throw std::invalid_argument("change has no text symbol");
    return change < 10 ? static_cast<char>('0' + change) : static_cast<char>('A' + change - 10);
}

int symbol_change(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'A' && c <= 'Z') return c - 'A' + 10;
    return -1;
}

TransitionSequence parse_sequence(const std::string& text, int dim) {
    if (dim < 1 || dim > kMaxSymbolDim)
        throw std::invalid_argument("sequence dimension out of range");
    TransitionSequence out{dim, {}};
    int line = 1, col = 0;
    for (char c : text) {
        if (c == '\n') {
            ++line;
            col = 0;
            continue;
        }
        ++col;
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        int change = symbol_change(c);
        if (change < 0)
            throw parse_error(std::string("unexpected character '") + c + "'", line, col);
        if (change >= dim)
            throw parse_error(std::string("coordinate '") + c + "' is outside dimension " +
                                  std::to_string(dim),
                              line, col);
        out.changes.push_back(static_cast<std::uint8_t>(change));
    }
    return out;
}

std::string format_sequence(const TransitionSequence& seq) {
    std::string out;
    out.reserve(seq.size());
    for (auto c : seq.changes) out += change_symbol(c);
    return out;
}

}  // namespace ccode
