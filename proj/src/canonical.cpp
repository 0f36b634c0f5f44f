#include "ccode/canonical.hpp"

#include <algorithm>

namespace ccode {

std::string CanonicalKey::hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(data.size() * 2);
    for (auto b : data) {
        out += digits[b >> 4];
        out += digits[b & 0x0f];
    }
    return out;
}

namespace {

CanonicalKey make_key(KeyKind kind, int dim, const std::vector<std::uint8_t>& payload) {
    CanonicalKey key;
    key.kind = kind;
    key.dim = dim;
    key.data.reserve(payload.size() + 4);
    key.data.push_back(static_cast<std::uint8_t>(kind));
    key.data.push_back(static_cast<std::uint8_t>(dim));
    key.data.push_back(static_cast<std::uint8_t>(payload.size() & 0xff));
    key.data.push_back(static_cast<std::uint8_t>(payload.size() >> 8));
    key.data.insert(key.data.end(), payload.begin(), payload.end());
    return key;
}

// First-occurrence relabeling of seq[start], seq[start+step], ... of the given
// length (indices taken mod the sequence size when wrap is set).
std::vector<std::uint8_t> relabel_run(const std::vector<std::uint8_t>& seq, std::size_t start,
                                      int step, std::size_t len, bool wrap) {
    std::array<std::int8_t, kMaxSymbolDim> map;
    map.fill(-1);
    std::int8_t next = 0;
    std::vector<std::uint8_t> out;
    out.reserve(len);
    const std::size_t n = seq.size();
    std::size_t pos = start;
    for (std::size_t t = 0; t < len; ++t) {
        std::uint8_t c = seq[pos];
        if (map[c] < 0) map[c] = next++;
        out.push_back(static_cast<std::uint8_t>(map[c]));
        if (step > 0)
            pos = wrap ? (pos + 1) % n : pos + 1;
        else
            pos = wrap ? (pos + n - 1) % n : pos - 1;
    }
    return out;
}

}  // namespace

TransitionSequence relabel_first_occurrence(const TransitionSequence& seq) {
    if (seq.empty()) return seq;
    return TransitionSequence{seq.dim, relabel_run(seq.changes, 0, +1, seq.size(), false)};
}

CanonicalKey canonical_path(const TransitionSequence& seq) {
    const std::size_t n = seq.size();
    if (n == 0) return make_key(KeyKind::path, seq.dim, {});
    auto fwd = relabel_run(seq.changes, 0, +1, n, false);
    auto bwd = relabel_run(seq.changes, n - 1, -1, n, false);
    return make_key(KeyKind::path, seq.dim, std::min(fwd, bwd));
}

TransitionSequence canonical_circuit_sequence(const TransitionSequence& seq) {
    if (!closes(seq)) throw std::invalid_argument("canonical_circuit: sequence does not close");
    const std::size_t n = seq.size();
    if (n == 0) return seq;
    std::vector<std::uint8_t> best;
    for (std::size_t r = 0; r < n; ++r) {
        auto fwd = relabel_run(seq.changes, r, +1, n, true);
        if (best.empty() || fwd < best) best = std::move(fwd);
        auto bwd = relabel_run(seq.changes, r, -1, n, true);
        if (bwd < best) best = std::move(bwd);
    }
    return TransitionSequence{seq.dim, best};
}

CanonicalKey canonical_circuit(const TransitionSequence& seq) {
    auto best = canonical_circuit_sequence(seq);
    return make_key(KeyKind::circuit, seq.dim, best.changes);
}

std::optional<std::vector<int>> inversion_permutation(const TransitionSequence& seq, int s) {
    const int n = static_cast<int>(seq.size());
    if (n == 0) return std::nullopt;
    std::vector<int> tau(static_cast<std::size_t>(seq.dim), -1);
    std::vector<char> used(static_cast<std::size_t>(seq.dim), 0);
    for (int i = 0; i < n; ++i) {
        int from = seq.changes[static_cast<std::size_t>(((s - 1 - i) % n + n) % n)];
        int to = seq.changes[static_cast<std::size_t>(i)];
        if (tau[static_cast<std::size_t>(from)] < 0) {
            if (used[static_cast<std::size_t>(to)]) return std::nullopt;
            tau[static_cast<std::size_t>(from)] = to;
            used[static_cast<std::size_t>(to)] = 1;
        } else if (tau[static_cast<std::size_t>(from)] != to) {
            return std::nullopt;
        }
    }
    // Complete the injection to a full permutation.
    int next = 0;
    for (auto& t : tau) {
        if (t >= 0) continue;
        while (used[static_cast<std::size_t>(next)]) ++next;
        t = next;
        used[static_cast<std::size_t>(next)] = 1;
    }
    return tau;
}

std::vector<int> inversion_alignments(const TransitionSequence& seq) {
    std::vector<int> out;
    const int n = static_cast<int>(seq.size());
    for (int s = 0; s < n; ++s)
        if (inversion_permutation(seq, s)) out.push_back(s);
    return out;
}

InversionClass classify_inversion(const Code& coil) {
    if (coil.kind != Kind::coil) throw std::invalid_argument("classify_inversion: input is not a coil");
    InversionClass cls;
    for (int s : inversion_alignments(coil.seq)) {
        cls.invertible = true;
        if (s % 2 == 0)
            cls.vertex_fixed = true;
        else
            cls.change_fixed = true;
    }
    return cls;
}

}  // namespace ccode
