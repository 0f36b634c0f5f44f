#include "ccode/direct.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "ccode/spread.hpp"

namespace ccode {

SequencePruner::SequencePruner(int dim) : dim_(dim) {
    if (dim < 1 || dim > kMaxSymbolDim) throw std::invalid_argument("dimension out of range");
}

bool SequencePruner::push(int change) {
    if (change < 0 || change >= dim_) throw std::invalid_argument("change index not below dimension");
    seq_.push_back(static_cast<std::uint8_t>(change));
    undo_.emplace_back();
    suffixes_.emplace_back();
    suffixes_.back().map.fill(-1);
    if (rejected_depth_ >= 0) return false;  // monotone: stay rejected

    Undo& u = undo_.back();
    const int n = static_cast<int>(seq_.size()) - 1;
    const std::uint8_t c = seq_.back();
    bool reject = false;

    // Forward: every active suffix s[i..] gains one element; its relabeled
    // form is compared against the prefix of equal length.
    for (int i = 0; i <= n && !reject; ++i) {
        auto& st = suffixes_[static_cast<std::size_t>(i)];
        if (!st.active) continue;
        auto& m = st.map[c];
        if (m < 0) {
            m = st.next++;
            u.newly_mapped.push_back(static_cast<std::uint32_t>(i));
        }
        const std::uint8_t base = seq_[static_cast<std::size_t>(n - i)];
        if (m < static_cast<std::int8_t>(base)) {
            reject = true;
        } else if (m > static_cast<std::int8_t>(base)) {
            st.active = false;
            u.deactivated.push_back(static_cast<std::uint32_t>(i));
        }
    }

    // Backward: the reversed ranges anchored at n are prefixes of one walk
    // down the sequence; the first strict difference settles all of them.
    if (!reject) {
        std::array<std::int8_t, kMaxSymbolDim> rmap;
        rmap.fill(-1);
        std::int8_t rnext = 0;
        for (int t = n; t >= 0; --t) {
            auto& m = rmap[seq_[static_cast<std::size_t>(t)]];
            if (m < 0) m = rnext++;
            const std::uint8_t base = seq_[static_cast<std::size_t>(n - t)];
            if (m < static_cast<std::int8_t>(base)) {
                reject = true;
                break;
            }
            if (m > static_cast<std::int8_t>(base)) break;
        }
    }

    if (reject) {
        rejected_depth_ = n;
        u.rejected = true;
        return false;
    }
    return true;
}

void SequencePruner::pop() {
    if (seq_.empty()) throw std::logic_error("pop on empty pruner");
    const Undo& u = undo_.back();
    if (u.rejected) rejected_depth_ = -1;
    const std::uint8_t c = seq_.back();
    for (auto i : u.newly_mapped) {
        auto& st = suffixes_[i];
        st.map[c] = -1;
        --st.next;
    }
    for (auto i : u.deactivated) suffixes_[i].active = true;
    suffixes_.pop_back();
    undo_.pop_back();
    seq_.pop_back();
}

bool prune_check(const TransitionSequence& prefix) {
    if (prefix.empty()) throw std::invalid_argument("prune_check needs a nonempty prefix");
    SequencePruner pruner(prefix.dim);
    bool ok = true;
    for (auto c : prefix.changes) ok = pruner.push(c);
    return ok;
}

namespace {

struct LocalResult {
    int max_len = 0;
    std::set<CanonicalKey> max_classes;
    std::set<CanonicalKey> all_classes;
    std::uint64_t nodes = 0;
    std::uint64_t found = 0;
    bool complete = true;
};

void merge_into(DirectSummary& total, LocalResult&& part) {
    total.nodes += part.nodes;
    total.found += part.found;
    total.complete = total.complete && part.complete;
    if (part.max_len > total.max_len) {
        total.max_len = part.max_len;
        total.max_classes = std::move(part.max_classes);
    } else if (part.max_len == total.max_len) {
        total.max_classes.merge(part.max_classes);
    }
    total.all_classes.merge(part.all_classes);
}

class DirectRunner {
public:
    DirectRunner(const SearchConfig& cfg, const DirectSink& sink, std::mutex* sink_mutex)
        : cfg_(cfg),
          sink_(sink),
          sink_mutex_(sink_mutex),
          checker_(cfg.kind, cfg.d, cfg.k),
          pruner_(cfg.d) {}

    LocalResult& result() { return res_; }

    bool replay(const std::vector<std::uint8_t>& prefix) {
        for (auto c : prefix) {
            if (!checker_.push(c)) return false;
            if (cfg_.prune == PruneLevel::subsequence && !pruner_.push(c)) return false;
        }
        return true;
    }

    // frontier != nullptr: stop descending at split depth and record prefixes.
    void dfs(std::vector<std::vector<std::uint8_t>>* frontier) {
        if (!res_.complete) return;
        if (frontier && checker_.size() == cfg_.split_depth) {
            frontier->push_back(checker_.sequence().changes);
            return;
        }
        const int prev = checker_.size() ? checker_.sequence().changes.back() : -1;
        for (int step = 0; step < cfg_.d; ++step) {
            const int c = cfg_.reverse_order ? cfg_.d - 1 - step : step;
            if (c == prev) continue;
            ++res_.nodes;
            if (cfg_.max_nodes && res_.nodes > cfg_.max_nodes) {
                res_.complete = false;
                return;
            }
            if (cfg_.kind == Kind::coil && checker_.size() >= 1 &&
                (checker_.head() ^ (bits_t{1} << c)) == 0) {
                checker_.push(c);
                if (checker_.close_ok()) record(checker_.sequence());
                checker_.pop();
                continue;  // the walk cannot pass through its origin
            }
            if (!checker_.push(c)) {
                checker_.pop();
                continue;
            }
            if (cfg_.prune == PruneLevel::subsequence && !pruner_.push(c)) {
                pruner_.pop();
                checker_.pop();
                continue;
            }
            if (cfg_.kind == Kind::snake) record(checker_.sequence());
            dfs(frontier);
            if (cfg_.prune == PruneLevel::subsequence) pruner_.pop();
            checker_.pop();
        }
    }

private:
    void record(const TransitionSequence& seq) {
        const int n = static_cast<int>(seq.size());
        if (n < res_.max_len && !cfg_.collect_all_classes && !sink_) return;
        if (n >= res_.max_len || cfg_.collect_all_classes) {
            CanonicalKey key =
                cfg_.kind == Kind::coil ? canonical_circuit(seq) : canonical_path(seq);
            if (n > res_.max_len) {
                res_.max_len = n;
                res_.max_classes.clear();
            }
            if (n == res_.max_len) res_.max_classes.insert(key);
            if (cfg_.collect_all_classes) res_.all_classes.insert(std::move(key));
            ++res_.found;
        }
        if (sink_ && n >= cfg_.min_report_length) {
            Code code{cfg_.kind, cfg_.d, cfg_.k, seq};
            if (sink_mutex_) {
                std::lock_guard<std::mutex> lock(*sink_mutex_);
                sink_(code);
            } else {
                sink_(code);
            }
        }
    }

    const SearchConfig& cfg_;
    const DirectSink& sink_;
    std::mutex* sink_mutex_;
    SpreadChecker checker_;
    SequencePruner pruner_;
    LocalResult res_;
};

}  // namespace

DirectSummary direct_search(const SearchConfig& cfg, const DirectSink& sink) {
    if (cfg.d < 2 || cfg.d > kMaxVertexDim) throw std::invalid_argument("dimension out of range");
    if (cfg.k < 1) throw std::invalid_argument("spread must be at least 1");

    DirectSummary total;
    const bool parallel = cfg.split_depth > 0 && cfg.tasks > 1;
    std::mutex sink_mutex;
    std::mutex* sink_lock = parallel && sink ? &sink_mutex : nullptr;

    std::vector<std::vector<std::uint8_t>> frontier;
    {
        DirectRunner root(cfg, sink, sink_lock);
        root.dfs(cfg.split_depth > 0 ? &frontier : nullptr);
        merge_into(total, std::move(root.result()));
    }
    if (cfg.split_depth <= 0) return total;

    std::mutex merge_mutex;
    std::atomic<std::size_t> next{0};
    auto work = [&]() {
        for (;;) {
            std::size_t idx = next.fetch_add(1);
            if (idx >= frontier.size()) return;
            DirectRunner runner(cfg, sink, sink_lock);
            if (!runner.replay(frontier[idx])) continue;
            runner.dfs(nullptr);
            std::lock_guard<std::mutex> lock(merge_mutex);
            merge_into(total, std::move(runner.result()));
        }
    };
    if (parallel) {
        std::vector<std::thread> pool;
        const int nthreads = std::max(1, cfg.tasks);
        pool.reserve(static_cast<std::size_t>(nthreads));
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    } else {
        work();
    }
    return total;
}

}  // namespace ccode
