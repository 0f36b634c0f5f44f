#include "ccode/permuted.hpp"

#include <algorithm>
#include <bit>

#include "ccode/kernels.hpp"

namespace ccode {

namespace {

// Strip scan with per-index circuit-distance lower bounds fwd(j) = fa + fb*j
// and bwd(j) = ba + bb*j (slopes +-1). The window where both bounds reach k
// collapses to a uniform distance->=k scan handled by the kernel; indices
// outside it take max(1, min(k, fwd, bwd)).
bool scan_strip(bits_t v, const bits_t* strip, long len, int k, long fa, long fb, long ba,
                long bb) {
    if (len <= 0) return true;
    long lo = 0, hi = len - 1;
    if (fb > 0)
        lo = std::max(lo, static_cast<long>(k) - fa);
    else
        hi = std::min(hi, fa - static_cast<long>(k));
    if (bb > 0)
        lo = std::max(lo, static_cast<long>(k) - ba);
    else
        hi = std::min(hi, ba - static_cast<long>(k));

    auto pair_ok = [&](long j) {
        long t = std::min({static_cast<long>(k), fa + fb * j, ba + bb * j});
        if (t < 1) t = 1;
        return std::popcount(v ^ strip[j]) >= t;
    };
    if (lo > hi) {
        for (long j = 0; j < len; ++j)
            if (!pair_ok(j)) return false;
        return true;
    }
    for (long j = 0; j < lo; ++j)
        if (!pair_ok(j)) return false;
    if (!kern::all_dist_ge(v, strip + lo, static_cast<std::size_t>(hi - lo + 1), k))
        return false;
    for (long j = hi + 1; j < len; ++j)
        if (!pair_ok(j)) return false;
    return true;
}

// v sits at index I of the strip's own segment: distance to index j along the
// walk is exactly I-j, so near pairs must be straight and the rest clear k.
bool scan_same_segment(bits_t v, const bits_t* strip, long count, int k) {
    long bulk = count - k + 1;  // indices [0, I-k]
    if (bulk > 0 && !kern::all_dist_ge(v, strip, static_cast<std::size_t>(bulk), k))
        return false;
    for (long j = std::max<long>(0, bulk); j < count; ++j)
        if (std::popcount(v ^ strip[j]) != static_cast<int>(count - j)) return false;
    return true;
}

class Searcher {
public:
    Searcher(const Skeleton& s, int k, const PermutedLimits& limits, int segments,
             const PermutedSink& sink, PermutedStats& stats)
        : skel_(s),
          d_(s.dim),
          k_(k),
          segs_(segments),
          limits_(limits),
          sink_(sink),
          stats_(stats) {
        // pow_map_[p][c] = pi^p(c)
        pow_map_.assign(static_cast<std::size_t>(segs_), std::vector<int>());
        std::vector<int> cur(static_cast<std::size_t>(d_));
        for (int c = 0; c < d_; ++c) cur[static_cast<std::size_t>(c)] = c;
        for (int p = 0; p < segs_; ++p) {
            pow_map_[static_cast<std::size_t>(p)] = cur;
            for (int c = 0; c < d_; ++c)
                cur[static_cast<std::size_t>(c)] = s.perm.apply(cur[static_cast<std::size_t>(c)]);
        }
        seg_.assign(static_cast<std::size_t>(segs_), {});
        for (int p = 0; p < segs_; ++p)
            seg_[static_cast<std::size_t>(p)].push_back(s.starts[static_cast<std::size_t>(p)]);
        news_.resize(static_cast<std::size_t>(segs_));
    }

    void run_full() { recurse_full(); }
    void run_truncated() { recurse_trunc_phase1(); }

private:
    bool budget_spent() {
        ++stats_.nodes;
        if (limits_.max_nodes && stats_.nodes > limits_.max_nodes) {
            stats_.complete = false;
            return true;
        }
        return false;
    }

    void emit(const TransitionSequence& full, const TransitionSequence& initial, int period,
              std::optional<int> truncation) {
        auto report = verify_spread(Kind::coil, d_, k_, full);
        if (!report.ok) return;
        PermutedHit hit{Code{Kind::coil, d_, k_, full}, skel_.perm, initial, period, truncation,
                        skel_.leap0};
        ++stats_.hits;
        stats_.best_n = std::max(stats_.best_n, hit.code.length());
        sink_(hit);
    }

    TransitionSequence expand(const std::vector<std::uint8_t>& initial, int full_segments,
                              long partial_len) const {
        TransitionSequence out{d_, {}};
        out.changes.reserve(initial.size() * static_cast<std::size_t>(full_segments) +
                            static_cast<std::size_t>(partial_len));
        for (int p = 0; p < full_segments; ++p)
            for (auto c : initial)
                out.changes.push_back(
                    static_cast<std::uint8_t>(pow_map_[static_cast<std::size_t>(p)][c]));
        for (long i = 0; i < partial_len; ++i)
            out.changes.push_back(static_cast<std::uint8_t>(
                pow_map_[static_cast<std::size_t>(segs_ - 1)][initial[static_cast<std::size_t>(i)]]));
        return out;
    }

    void push_all(int upto) {
        for (int p = 0; p < upto; ++p)
            seg_[static_cast<std::size_t>(p)].push_back(news_[static_cast<std::size_t>(p)]);
    }
    void pop_all(int upto) {
        for (int p = 0; p < upto; ++p) seg_[static_cast<std::size_t>(p)].pop_back();
    }

    // ---- full mode -------------------------------------------------------

    bool scans_full(long I) {
        const int P = segs_;
        const long Lmin = I + 1;
        for (int g = 1; g < P; ++g) {
            long t = std::min({static_cast<long>(k_), g * Lmin, (P - g) * Lmin});
            if (t < 1) t = 1;
            if (std::popcount(news_[0] ^ news_[static_cast<std::size_t>(g)]) < t) return false;
        }
        if (!scan_same_segment(news_[0], seg_[0].data(), I, k_)) return false;
        for (int q = 1; q < P; ++q) {
            if (!scan_strip(news_[0], seg_[static_cast<std::size_t>(q)].data(), I, k_,
                            q * Lmin - I, +1, (P - q) * Lmin + I, -1))
                return false;
        }
        return true;
    }

    void recurse_full() {
        if (!stats_.complete) return;
        const long n = static_cast<long>(initial_.size());
        const long I = n + 1;
        if (limits_.max_len && I > limits_.max_len) return;
        for (int c = 0; c < d_; ++c) {
            if (n > 0 && c == initial_.back()) continue;
            if (budget_spent()) return;
            for (int p = 0; p < segs_; ++p)
                news_[static_cast<std::size_t>(p)] =
                    seg_[static_cast<std::size_t>(p)].back() ^
                    (bits_t{1} << pow_map_[static_cast<std::size_t>(p)][c]);
            if (news_[0] == skel_.starts[1]) {
                initial_.push_back(static_cast<std::uint8_t>(c));
                emit(expand(initial_, segs_, 0), TransitionSequence{d_, initial_}, segs_,
                     std::nullopt);
                initial_.pop_back();
                continue;  // a repeated vertex blocks any extension
            }
            if (!scans_full(I)) continue;
            push_all(segs_);
            initial_.push_back(static_cast<std::uint8_t>(c));
            recurse_full();
            initial_.pop_back();
            pop_all(segs_);
        }
    }

    // ---- truncated mode --------------------------------------------------
    // Phase 1 grows all segments; when the last segment's walk returns to the
    // origin at partial length I, that segment freezes and phase 2 extends the
    // rest until the initial sequence closes at some L > I.

    bool scans_trunc(long I, long Lmin, long Fmin, int live) {
        const int P = segs_;
        for (int g = 1; g < live; ++g) {
            long t = std::min({static_cast<long>(k_), g * Lmin, (P - 1 - g) * Lmin + Fmin});
            if (t < 1) t = 1;
            if (std::popcount(news_[0] ^ news_[static_cast<std::size_t>(g)]) < t) return false;
        }
        if (!scan_same_segment(news_[0], seg_[0].data(), I, k_)) return false;
        for (int g = 1; g < P; ++g) {
            const auto& strip = seg_[static_cast<std::size_t>(g)];
            if (!scan_strip(news_[0], strip.data(), static_cast<long>(strip.size()), k_,
                            g * Lmin - I, +1, (P - 1 - g) * Lmin + Fmin + I, -1))
                return false;
        }
        for (int g = 1; g < live; ++g) {
            if (!scan_strip(news_[static_cast<std::size_t>(g)], seg_[0].data(), I, k_,
                            (P - 1 - g) * Lmin + Fmin - I, +1, g * Lmin + I, -1))
                return false;
        }
        return true;
    }

    void recurse_trunc_phase1() {
        if (!stats_.complete) return;
        const long n = static_cast<long>(initial_.size());
        const long I = n + 1;
        if (limits_.max_len && I > limits_.max_len) return;
        const int P = segs_;
        for (int c = 0; c < d_; ++c) {
            if (n > 0 && c == initial_.back()) continue;
            if (budget_spent()) return;
            for (int p = 0; p < P; ++p)
                news_[static_cast<std::size_t>(p)] =
                    seg_[static_cast<std::size_t>(p)].back() ^
                    (bits_t{1} << pow_map_[static_cast<std::size_t>(p)][c]);
            if (news_[static_cast<std::size_t>(P - 1)] == 0) {
                // Partial segment closes here; its own new vertex is the
                // origin and is not stored. Segment 0 reaching starts[1]
                // simultaneously would force L = I, too short to truncate.
                if (news_[0] == skel_.starts[1]) continue;
                if (!scans_trunc(I, /*Lmin=*/I + 1, /*Fmin=*/I, P - 1)) continue;
                push_all(P - 1);
                initial_.push_back(static_cast<std::uint8_t>(c));
                partial_len_ = I;
                recurse_trunc_phase2();
                partial_len_ = 0;
                initial_.pop_back();
                pop_all(P - 1);
                continue;
            }
            if (!scans_trunc(I, /*Lmin=*/I + 2, /*Fmin=*/I + 1, P)) continue;
            push_all(P);
            initial_.push_back(static_cast<std::uint8_t>(c));
            recurse_trunc_phase1();
            initial_.pop_back();
            pop_all(P);
        }
    }

    void recurse_trunc_phase2() {
        if (!stats_.complete) return;
        const long n = static_cast<long>(initial_.size());
        const long I = n + 1;
        if (limits_.max_len && I > limits_.max_len) return;
        const int P = segs_;
        for (int c = 0; c < d_; ++c) {
            if (c == initial_.back()) continue;
            if (budget_spent()) return;
            for (int p = 0; p < P - 1; ++p)
                news_[static_cast<std::size_t>(p)] =
                    seg_[static_cast<std::size_t>(p)].back() ^
                    (bits_t{1} << pow_map_[static_cast<std::size_t>(p)][c]);
            if (news_[0] == skel_.starts[1]) {
                initial_.push_back(static_cast<std::uint8_t>(c));
                emit(expand(initial_, P - 1, partial_len_), TransitionSequence{d_, initial_}, P,
                     static_cast<int>(partial_len_) - 1);
                initial_.pop_back();
                continue;
            }
            if (!scans_trunc(I, /*Lmin=*/I + 1, /*Fmin=*/partial_len_, P - 1)) continue;
            push_all(P - 1);
            initial_.push_back(static_cast<std::uint8_t>(c));
            recurse_trunc_phase2();
            initial_.pop_back();
            pop_all(P - 1);
        }
    }

    const Skeleton& skel_;
    int d_;
    int k_;
    int segs_;
    const PermutedLimits& limits_;
    const PermutedSink& sink_;
    PermutedStats& stats_;

    std::vector<std::vector<int>> pow_map_;
    std::vector<std::vector<bits_t>> seg_;
    std::vector<bits_t> news_;
    std::vector<std::uint8_t> initial_;
    long partial_len_ = 0;
};

// Buffers hits so the default policy can report just the first-found longest.
class EmitPolicy {
public:
    EmitPolicy(bool emit_all, const PermutedSink& sink) : emit_all_(emit_all), sink_(sink) {}

    PermutedSink wrap() {
        return [this](const PermutedHit& hit) {
            if (emit_all_) {
                sink_(hit);
                return;
            }
            if (!best_ || hit.code.length() > best_->code.length()) best_ = hit;
        };
    }

    void flush() {
        if (!emit_all_ && best_) sink_(*best_);
    }

private:
    bool emit_all_;
    const PermutedSink& sink_;
    std::optional<PermutedHit> best_;
};

}  // namespace

PermutedStats search_initial(const Skeleton& s, int k, const PermutedLimits& limits,
                             const PermutedSink& sink) {
    PermutedStats stats;
    EmitPolicy policy(limits.emit_all, sink);
    auto inner = policy.wrap();
    Searcher searcher(s, k, limits, s.period, inner, stats);
    searcher.run_full();
    policy.flush();
    return stats;
}

PermutedStats search_truncated(const Skeleton& s, int k, const PermutedLimits& limits,
                               const PermutedSink& sink) {
    PermutedStats stats;
    EmitPolicy policy(limits.emit_all, sink);
    auto inner = policy.wrap();
    {
        Searcher searcher(s, k, limits, s.period, inner, stats);
        searcher.run_full();
    }
    for (int segments = 2; segments <= s.period; ++segments) {
        Searcher searcher(s, k, limits, segments, inner, stats);
        searcher.run_truncated();
    }
    policy.flush();
    return stats;
}

PermutedStats search_natural(int d, int k, const PermutedLimits& limits,
                             const PermutedSink& sink) {
    PermutedStats total;
    auto perm = identity_permutation(d);
    SkeletonDedup dedup;
    const bits_t end = (d == kMaxVertexDim) ? 0 : (bits_t{1} << d);
    for (bits_t leap = 1; leap != end; ++leap) {
        auto derived = derive_skeleton(perm, leap, k, SkeletonPrune::none);
        if (!derived) continue;
        if (!dedup.insert(*derived.skeleton)) continue;
        auto stats = search_initial(*derived.skeleton, k, limits, sink);
        total.nodes += stats.nodes;
        total.complete = total.complete && stats.complete;
        total.best_n = std::max(total.best_n, stats.best_n);
        total.hits += stats.hits;
    }
    return total;
}

Code construct_special(SpecialKind kind, int d) {
    if (kind == SpecialKind::spread_d) {
        if (d < 2) throw std::invalid_argument("spread_d code needs d >= 2");
        TransitionSequence seq{d, {}};
        for (int rep = 0; rep < 2; ++rep)
            for (int c = 0; c < d; ++c) seq.changes.push_back(static_cast<std::uint8_t>(c));
        return make_verified_code(Kind::coil, d, d, seq);
    }
    if (d < 3) throw std::invalid_argument("neighbors coil needs d >= 3");
    // Initial (1, 0) under pi: i -> i+1 mod d, expanded to all d segments.
    TransitionSequence seq{d, {}};
    for (int p = 0; p < d; ++p) {
        seq.changes.push_back(static_cast<std::uint8_t>((1 + p) % d));
        seq.changes.push_back(static_cast<std::uint8_t>(p));
    }
    return make_verified_code(Kind::coil, d, 2, seq);
}

}  // namespace ccode
