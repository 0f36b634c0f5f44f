#include "ccode/joiner.hpp"

#include "ccode/spread.hpp"

namespace ccode {

JoinTask make_join_task(const Code& first, const Code& second, Kind target, int spread) {
    if (first.kind != Kind::snake || second.kind != Kind::snake)
        throw std::invalid_argument("join inputs must be snakes");
    if (first.dim != second.dim)
        throw std::invalid_argument("join inputs must share a dimension");
    if (first.dim + 1 > kMaxVertexDim) throw std::invalid_argument("joined dimension too large");
    if (!verify_spread(Kind::snake, first.dim, spread, first.seq).ok ||
        !verify_spread(Kind::snake, second.dim, spread, second.seq).ok)
        throw std::invalid_argument("join inputs do not verify at the requested spread");
    return JoinTask{first, second, target, spread};
}

PartialPermutation::PartialPermutation(int dim)
    : map_(static_cast<std::size_t>(dim), -1), used_(static_cast<std::size_t>(dim), 0) {}

std::vector<int> PartialPermutation::candidates(int coord) const {
    if (assigned(coord)) throw std::invalid_argument("coordinate already assigned");
    std::vector<int> out;
    for (std::size_t i = 0; i < used_.size(); ++i)
        if (!used_[i]) out.push_back(static_cast<int>(i));
    return out;
}

void PartialPermutation::assign(int coord, int image) {
    if (assigned(coord)) throw std::invalid_argument("coordinate already assigned");
    if (used_[static_cast<std::size_t>(image)]) throw std::invalid_argument("image already used");
    map_[static_cast<std::size_t>(coord)] = image;
    used_[static_cast<std::size_t>(image)] = 1;
}

void PartialPermutation::unassign(int coord) {
    int img = map_[static_cast<std::size_t>(coord)];
    if (img < 0) throw std::invalid_argument("coordinate not assigned");
    used_[static_cast<std::size_t>(img)] = 0;
    map_[static_cast<std::size_t>(coord)] = -1;
}

std::vector<int> PartialPermutation::completed() const {
    std::vector<int> out = map_;
    std::size_t next = 0;
    for (auto& v : out) {
        if (v >= 0) continue;
        while (used_[next]) ++next;
        v = static_cast<int>(next++);
        while (next < used_.size() && used_[next]) ++next;
    }
    return out;
}

namespace {

class JoinSearch {
public:
    JoinSearch(const JoinTask& task, const JoinLimits& limits, const JoinSink& sink,
               JoinStats& stats)
        : task_(task),
          limits_(limits),
          sink_(sink),
          stats_(stats),
          d_(task.first.dim),
          checker_(task.target, d_ + 1, task.spread),
          sigma_(d_) {}

    void run() {
        for (auto c : task_.first.seq.changes) checker_.push(c);
        checker_.push(d_);
        if (checker_.valid()) step(0);
    }

private:
    void emit() {
        TransitionSequence seq = checker_.sequence();
        if (task_.target == Kind::coil) seq.changes.push_back(static_cast<std::uint8_t>(d_));
        auto report = verify_spread(task_.target, d_ + 1, task_.spread, seq);
        if (!report.ok) return;
        ++stats_.hits;
        sink_(JoinHit{Code{task_.target, d_ + 1, task_.spread, seq}, sigma_.completed()});
    }

    void step(std::size_t pos) {
        if (!stats_.complete) return;
        if (pos == task_.second.seq.size()) {
            emit();
            return;
        }
        int coord = task_.second.seq.changes[pos];
        if (sigma_.assigned(coord)) {
            advance(pos, sigma_.image(coord));
            return;
        }
        for (int img : sigma_.candidates(coord)) {
            if (limits_.identity_only && img != coord) continue;
            sigma_.assign(coord, img);
            advance(pos, img);
            sigma_.unassign(coord);
            if (!stats_.complete) return;
        }
    }

    void advance(std::size_t pos, int img) {
        ++stats_.nodes;
        if (limits_.max_nodes && stats_.nodes > limits_.max_nodes) {
            stats_.complete = false;
            return;
        }
        bool ok = checker_.push(img);
        if (ok) step(pos + 1);
        checker_.pop();
    }

    const JoinTask& task_;
    const JoinLimits& limits_;
    const JoinSink& sink_;
    JoinStats& stats_;
    int d_;
    SpreadChecker checker_;
    PartialPermutation sigma_;
};

}  // namespace

JoinStats join(const JoinTask& task, const JoinLimits& limits, const JoinSink& sink) {
    JoinStats stats;
    JoinSearch search(task, limits, sink, stats);
    search.run();
    return stats;
}

}  // namespace ccode
