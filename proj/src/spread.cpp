#include "ccode/spread.hpp"

#include <algorithm>
#include <bit>

#include "ccode/kernels.hpp"

namespace ccode {

namespace {

int pair_requirement(Kind kind, int k, int n, int i, int j) {
    int req = std::min(k, j - i);
    if (kind == Kind::coil) req = std::min(req, n + i - j);
    return req;
}

SpreadReport fail(int i, int j, int dist, int req, std::string what = {}) {
    SpreadReport r;
    r.ok = false;
    r.violation = SpreadViolation{i, j, dist, req, std::move(what)};
    return r;
}

}  // namespace

SpreadReport verify_spread(Kind kind, int d, int k, const TransitionSequence& seq) {
    if (k < 1) throw std::invalid_argument("spread must be at least 1");
    if (seq.dim != d) throw std::invalid_argument("sequence dimension mismatch");
    if (d < 1 || d > kMaxVertexDim) throw std::invalid_argument("dimension out of range");
    for (auto c : seq.changes)
        if (c >= d) throw std::invalid_argument("change index not below dimension");

    const int n = static_cast<int>(seq.size());
    std::vector<bits_t> verts;
    verts.reserve(static_cast<std::size_t>(n) + 1);
    bits_t cur = 0;
    verts.push_back(cur);
    for (auto c : seq.changes) {
        cur ^= bits_t{1} << c;
        verts.push_back(cur);
    }

    // Circuit vertices are x_0..x_{n-1}; a snake also owns its endpoint x_n.
    const int last = (kind == Kind::coil) ? n - 1 : n;
    for (int i = 0; i <= last; ++i) {
        for (int j = i + 1; j <= last; ++j) {
            int req = pair_requirement(kind, k, n, i, j);
            int dist = std::popcount(verts[static_cast<std::size_t>(i)] ^
                                     verts[static_cast<std::size_t>(j)]);
            if (dist < req) return fail(i, j, dist, req);
        }
    }

    if (kind == Kind::coil) {
        if (n > 0 && verts[static_cast<std::size_t>(n)] != verts[0])
            return fail(0, -1, 0, 0, "circuit does not close");
        if (n == 2) return fail(0, 1, 0, 0, "length-2 circuit repeats its edge");
        for (int i = 0; i < n; ++i)
            if (seq.changes[static_cast<std::size_t>(i)] ==
                seq.changes[static_cast<std::size_t>((i + 1) % n)])
                return fail(i, (i + 1) % n, 0, 0, "equal consecutive changes");
    }
    SpreadReport r;
    r.ok = true;
    return r;
}

Code make_verified_code(Kind kind, int d, int k, const TransitionSequence& seq) {
    auto report = verify_spread(kind, d, k, seq);
    if (!report.ok) {
        std::string msg = "sequence is not a valid spread-" + std::to_string(k) + " " +
                          kind_name(kind);
        if (report.violation && !report.violation->what.empty())
            msg += ": " + report.violation->what;
        throw std::invalid_argument(msg);
    }
    return Code{kind, d, k, seq};
}

SpreadChecker::SpreadChecker(Kind kind, int d, int k) : kind_(kind), d_(d), k_(k) {
    if (k < 1) throw std::invalid_argument("spread must be at least 1");
    if (d < 1 || d > kMaxVertexDim) throw std::invalid_argument("dimension out of range");
    verts_.push_back(0);
}

bool SpreadChecker::check_new(bits_t v) const {
    // New vertex index j = current size + 1; existing are x_0..x_{j-1}.
    const int j = static_cast<int>(seq_.size()) + 1;
    // Bulk: pairs with j - i >= k need distance >= k. For a coil prefix the
    // head pairs (i < k-1) are instead bounded by the future wraparound term,
    // which is at least i+1 for any closure beyond this push.
    int head = (kind_ == Kind::coil) ? std::min(k_ - 1, j) : 0;
    for (int i = 0; i < head && i <= j - 1; ++i) {
        int req = std::min({k_, j - i, i + 1});
        if (std::popcount(v ^ verts_[static_cast<std::size_t>(i)]) < req) return false;
    }
    int bulk_lo = head;
    int bulk_hi = j - k_;  // inclusive
    if (bulk_hi >= bulk_lo) {
        if (!kern::all_dist_ge(v, verts_.data() + bulk_lo,
                               static_cast<std::size_t>(bulk_hi - bulk_lo + 1), k_))
            return false;
    }
    // Tail: pairs closer than k along the walk need exact straightness.
    for (int i = std::max(head, j - k_ + 1); i <= j - 1; ++i) {
        int req = j - i;
        if (kind_ == Kind::coil) req = std::min(req, i + 1);
        if (std::popcount(v ^ verts_[static_cast<std::size_t>(i)]) < req) return false;
    }
    return true;
}

bool SpreadChecker::push(int change) {
    if (change < 0 || change >= d_) throw std::invalid_argument("change index not below dimension");
    bits_t v = verts_.back() ^ (bits_t{1} << change);
    bool ok = check_new(v);
    verts_.push_back(v);
    seq_.push_back(static_cast<std::uint8_t>(change));
    push_ok_.push_back(ok ? 1 : 0);
    if (!ok) ++invalid_pushes_;
    return invalid_pushes_ == 0;
}

void SpreadChecker::pop() {
    if (seq_.empty()) throw std::logic_error("pop on empty checker");
    if (!push_ok_.back()) --invalid_pushes_;
    push_ok_.pop_back();
    seq_.pop_back();
    verts_.pop_back();
}

bool SpreadChecker::close_ok() const {
    const int n = size();
    if (kind_ == Kind::coil && valid()) {
        // The pushes already hold min(k, j-i, i+1) for every pair; re-examine
        // closure, the edge-repeat rule, and all head-anchored pairs where the
        // true wraparound term can exceed i+1.
        if (n == 0) return true;
        if (verts_[static_cast<std::size_t>(n)] != verts_[0]) return false;
        if (n == 2) return false;
        for (int i = 0; i < n; ++i)
            if (seq_[static_cast<std::size_t>(i)] == seq_[static_cast<std::size_t>((i + 1) % n)])
                return false;
        for (int i = 0; i < std::min(k_ - 1, n); ++i) {
            for (int j = i + 1; j <= n - 1; ++j) {
                int req = std::min({k_, j - i, n + i - j});
                if (std::popcount(verts_[static_cast<std::size_t>(i)] ^
                                  verts_[static_cast<std::size_t>(j)]) < req)
                    return false;
            }
        }
        return true;
    }
    return verify_spread(Kind::coil, d_, k_, TransitionSequence{d_, seq_}).ok;
}

}  // namespace ccode
