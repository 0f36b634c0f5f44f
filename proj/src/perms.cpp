#include "ccode/perms.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

namespace ccode {

namespace {

std::vector<int> cycle_type_of(const std::vector<int>& mapping) {
    std::vector<int> type;
    std::vector<char> seen(mapping.size(), 0);
    for (std::size_t i = 0; i < mapping.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        std::size_t j = i;
        while (!seen[j]) {
            seen[j] = 1;
            j = static_cast<std::size_t>(mapping[j]);
            ++len;
        }
        type.push_back(len);
    }
    std::sort(type.rbegin(), type.rend());
    return type;
}

}  // namespace

bits_t CyclePermutation::apply_bits(bits_t v) const {
    bits_t out = 0;
    for (int i = 0; i < dim; ++i)
        if ((v >> i) & 1u) out |= bits_t{1} << mapping[static_cast<std::size_t>(i)];
    return out;
}

TransitionSequence CyclePermutation::apply_seq(const TransitionSequence& seq) const {
    if (seq.dim != dim) throw std::invalid_argument("permutation/sequence dimension mismatch");
    TransitionSequence out{dim, {}};
    out.changes.reserve(seq.size());
    for (auto c : seq.changes)
        out.changes.push_back(static_cast<std::uint8_t>(mapping[c]));
    return out;
}

CyclePermutation CyclePermutation::inverse() const {
    std::vector<int> inv(mapping.size());
    for (std::size_t i = 0; i < mapping.size(); ++i)
        inv[static_cast<std::size_t>(mapping[i])] = static_cast<int>(i);
    return make_permutation(std::move(inv));
}

CyclePermutation CyclePermutation::compose(const CyclePermutation& then) const {
    if (then.dim != dim) throw std::invalid_argument("compose: dimension mismatch");
    std::vector<int> out(mapping.size());
    for (std::size_t i = 0; i < mapping.size(); ++i)
        out[i] = then.mapping[static_cast<std::size_t>(mapping[i])];
    return make_permutation(std::move(out));
}

bool CyclePermutation::is_identity() const {
    for (std::size_t i = 0; i < mapping.size(); ++i)
        if (mapping[i] != static_cast<int>(i)) return false;
    return true;
}

int CyclePermutation::order() const {
    int ord = 1;
    for (int len : cycle_type) ord = std::lcm(ord, len);
    return ord;
}

CyclePermutation make_permutation(std::vector<int> one_line) {
    const int d = static_cast<int>(one_line.size());
    if (d < 1 || d > kMaxSymbolDim) throw std::invalid_argument("permutation dimension out of range");
    std::vector<char> hit(one_line.size(), 0);
    for (int v : one_line) {
        if (v < 0 || v >= d) throw std::invalid_argument("permutation image out of range");
        if (hit[static_cast<std::size_t>(v)]) throw std::invalid_argument("permutation is not a bijection");
        hit[static_cast<std::size_t>(v)] = 1;
    }
    CyclePermutation p;
    p.dim = d;
    p.cycle_type = cycle_type_of(one_line);
    p.mapping = std::move(one_line);
    return p;
}

CyclePermutation identity_permutation(int dim) {
    std::vector<int> m(static_cast<std::size_t>(dim));
    std::iota(m.begin(), m.end(), 0);
    return make_permutation(std::move(m));
}

CyclePermutation parse_permutation(const std::string& text, int dim) {
    std::vector<int> mapping(static_cast<std::size_t>(dim), -1);
    auto set_image = [&](int from, int to) {
        if (from >= dim || to >= dim)
            throw std::invalid_argument("permutation symbol outside dimension");
        if (mapping[static_cast<std::size_t>(from)] != -1)
            throw std::invalid_argument("permutation maps a coordinate twice");
        mapping[static_cast<std::size_t>(from)] = to;
    };

    bool has_paren = text.find('(') != std::string::npos;
    if (!has_paren) {
        // One-line notation: symbol i is pi(i); must cover every coordinate.
        std::vector<int> one_line;
        for (char c : text) {
            if (std::isspace(static_cast<unsigned char>(c))) continue;
            int v = symbol_change(c);
            if (v < 0) throw std::invalid_argument("bad permutation symbol");
            one_line.push_back(v);
        }
        if (static_cast<int>(one_line.size()) != dim)
            throw std::invalid_argument("one-line permutation must list all coordinates");
        return make_permutation(std::move(one_line));
    }

    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (c == '(') {
            std::vector<int> cycle;
            ++i;
            while (i < text.size() && text[i] != ')') {
                if (!std::isspace(static_cast<unsigned char>(text[i]))) {
                    int v = symbol_change(text[i]);
                    if (v < 0) throw std::invalid_argument("bad permutation symbol");
                    cycle.push_back(v);
                }
                ++i;
            }
            if (i == text.size()) throw std::invalid_argument("unterminated cycle");
            ++i;  // ')'
            if (cycle.empty()) throw std::invalid_argument("empty cycle");
            for (std::size_t t = 0; t < cycle.size(); ++t)
                set_image(cycle[t], cycle[(t + 1) % cycle.size()]);
        } else {
            int v = symbol_change(c);
            if (v < 0) throw std::invalid_argument("bad permutation symbol");
            set_image(v, v);  // bare symbol: fixed point
            ++i;
        }
    }
    for (auto& m : mapping)
        if (m == -1) throw std::invalid_argument("permutation leaves a coordinate unspecified");
    return make_permutation(std::move(mapping));
}

std::string permutation_cycles(const CyclePermutation& perm) {
    std::vector<std::vector<int>> cycles;
    std::vector<int> fixed;
    std::vector<char> seen(static_cast<std::size_t>(perm.dim), 0);
    for (int i = 0; i < perm.dim; ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        std::vector<int> cyc;
        int j = i;
        while (!seen[static_cast<std::size_t>(j)]) {
            seen[static_cast<std::size_t>(j)] = 1;
            cyc.push_back(j);
            j = perm.apply(j);
        }
        if (cyc.size() == 1)
            fixed.push_back(cyc[0]);
        else
            cycles.push_back(std::move(cyc));
    }
    std::stable_sort(cycles.begin(), cycles.end(),
                     [](const auto& a, const auto& b) { return a.size() > b.size(); });
    std::string out;
    for (const auto& cyc : cycles) {
        out += '(';
        for (int v : cyc) out += change_symbol(v);
        out += ')';
    }
    for (int v : fixed) out += change_symbol(v);
    if (out.empty()) out = "()";  // identity on an empty cycle list
    return out;
}

std::vector<std::vector<int>> partitions(int d, PartitionOrder order) {
    if (d < 1) throw std::invalid_argument("partitions of a nonpositive integer");
    std::vector<std::vector<int>> out;
    std::vector<int> p{d};
    while (true) {
        out.push_back(p);
        // Next partition in reverse lexicographic (descending) order.
        int i = static_cast<int>(p.size()) - 1;
        while (i >= 0 && p[static_cast<std::size_t>(i)] == 1) --i;
        if (i < 0) break;
        int rest = static_cast<int>(p.size()) - 1 - i;  // trailing ones
        int v = p[static_cast<std::size_t>(i)] - 1;
        p.resize(static_cast<std::size_t>(i) + 1);
        p[static_cast<std::size_t>(i)] = v;
        int remaining = rest + 1;
        while (remaining > 0) {
            int part = std::min(v, remaining);
            p.push_back(part);
            remaining -= part;
        }
    }
    if (order == PartitionOrder::lex) std::reverse(out.begin(), out.end());
    return out;
}

CyclePermutation representative(const std::vector<int>& partition) {
    std::vector<int> parts = partition;
    std::sort(parts.rbegin(), parts.rend());
    int d = std::accumulate(parts.begin(), parts.end(), 0);
    std::vector<int> mapping(static_cast<std::size_t>(d));
    int base = 0;
    for (int len : parts) {
        if (len < 1) throw std::invalid_argument("partition parts must be positive");
        for (int j = 0; j < len; ++j)
            mapping[static_cast<std::size_t>(base + j)] = base + (j + 1) % len;
        base += len;
    }
    return make_permutation(std::move(mapping));
}

std::string leap_orbit_key(const CyclePermutation& perm, bits_t leap) {
    // Bits along each cycle form a necklace: centralizer elements rotate each
    // cycle independently and permute equal-length cycles, so the rotation-
    // minimal necklace per cycle, sorted within each length class, is a
    // complete orbit invariant.
    std::map<int, std::vector<std::uint64_t>> classes;
    std::vector<char> seen(static_cast<std::size_t>(perm.dim), 0);
    for (int i = 0; i < perm.dim; ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        std::vector<int> cyc;
        int j = i;
        while (!seen[static_cast<std::size_t>(j)]) {
            seen[static_cast<std::size_t>(j)] = 1;
            cyc.push_back(j);
            j = perm.apply(j);
        }
        const int len = static_cast<int>(cyc.size());
        std::uint64_t word = 0;
        for (int t = 0; t < len; ++t)
            if ((leap >> cyc[static_cast<std::size_t>(t)]) & 1u) word |= std::uint64_t{1} << t;
        std::uint64_t best = word;
        std::uint64_t mask = (len == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << len) - 1);
        std::uint64_t w = word;
        for (int t = 1; t < len; ++t) {
            w = ((w >> 1) | (w << (len - 1))) & mask;
            best = std::min(best, w);
        }
        classes[len].push_back(best);
    }
    std::string key;
    for (auto& [len, words] : classes) {
        std::sort(words.begin(), words.end());
        key += std::to_string(len);
        key += ':';
        for (auto w : words) {
            key += std::to_string(w);
            key += ',';
        }
        key += ';';
    }
    return key;
}

std::vector<CyclePermutation> centralizer_brute(const CyclePermutation& perm) {
    if (perm.dim > 8) throw std::invalid_argument("centralizer_brute limited to d <= 8");
    std::vector<int> sigma(static_cast<std::size_t>(perm.dim));
    std::iota(sigma.begin(), sigma.end(), 0);
    std::vector<CyclePermutation> out;
    do {
        bool commutes = true;
        for (int i = 0; i < perm.dim && commutes; ++i)
            commutes = sigma[static_cast<std::size_t>(perm.apply(i))] ==
                       perm.apply(sigma[static_cast<std::size_t>(i)]);
        if (commutes) out.push_back(make_permutation(sigma));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

bool leaps_equivalent_brute(const CyclePermutation& perm, bits_t a, bits_t b) {
    for (const auto& sigma : centralizer_brute(perm))
        if (sigma.apply_bits(a) == b) return true;
    return false;
}

}  // namespace ccode
