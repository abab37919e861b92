#include "pathram/solver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>
#include <unordered_map>

#include "pathram/recursion.hpp"

namespace pathram::solver {

namespace {

using std::int32_t;
using std::int64_t;
using std::size_t;
using std::uint64_t;

// Hot-path arithmetic is 32-bit; every computed value is range-checked.
// Bound-grid cells saturate at bound_sat (sound: a saturated bound never
// prunes), so cell sums stay clear of 32-bit overflow.
constexpr int32_t value_limit = 1 << 28;
constexpr int32_t bound_sat = 1 << 29;

int32_t min_split32(const std::vector<int32_t>& seq) {
    const int64_t total = static_cast<int64_t>(seq.size()) - 1;
    const int32_t* data = seq.data();
    int32_t best = data[0] + data[total];
    for (int64_t j = 1; j <= total / 2; ++j) {
        int32_t cand = data[j] + data[total - j];
        if (cand < best) best = cand;
    }
    return best;
}

struct FrontierEntry {
    std::vector<int32_t> state;  // x1[1..a-1] followed by x2[1..b-1]
    int32_t last1 = 0;
    int32_t last2 = 0;
    int64_t sum = 0;
    uint64_t stamp = 0;
};

struct SearchCtx {
    int64_t l1 = 0;
    int64_t l2 = 0;
    SearchOptions opt;
    bool witness_mode = true;

    std::vector<int32_t> x1{0};
    std::vector<int32_t> x2{0};
    int64_t sum1 = 0;
    int64_t sum2 = 0;
    std::vector<std::uint8_t> prefix;

    // Completion-bound scratch: fixed-stride cap grids over the remaining
    // rectangle, rows contiguous in the direction the inner min loops read.
    std::vector<int32_t> cap1;  // [dq][dp] row-major
    std::vector<int32_t> cap2;  // [dp][dq] row-major
    size_t stride_p = 0;
    size_t stride_q = 0;

    std::unordered_map<std::uint32_t, std::vector<FrontierEntry>> frontiers;
    uint64_t stamp_clock = 0;

    std::atomic<int64_t>* incumbent = nullptr;
    int64_t local_best = 0;
    std::vector<std::vector<std::uint8_t>> best_walks;
    bool best_truncated = false;

    SearchCounters counters;

    int64_t load_incumbent() const { return incumbent->load(std::memory_order_relaxed); }
};

void raise_incumbent(SearchCtx& c, int64_t v) {
    int64_t cur = c.incumbent->load(std::memory_order_relaxed);
    while (cur < v && !c.incumbent->compare_exchange_weak(cur, v, std::memory_order_relaxed)) {
    }
}

void note_leaf(SearchCtx& c, int64_t v, const std::uint8_t* tail, size_t tail_len) {
    raise_incumbent(c, v);
    if (v > c.local_best) {
        c.local_best = v;
        c.best_walks.clear();
        c.best_truncated = false;
    }
    if (!c.opt.collect_witnesses) return;
    if (v == c.local_best && v == c.load_incumbent()) {
        if (c.best_walks.size() >= c.opt.witness_cap) {
            c.best_truncated = true;
            return;
        }
        std::vector<std::uint8_t> full = c.prefix;
        if (tail_len > 0) full.insert(full.end(), tail, tail + tail_len);
        c.best_walks.push_back(std::move(full));
    }
}

int32_t node_value(SearchCtx& c) {
    int64_t k = 1 + static_cast<int64_t>(min_split32(c.x1)) + min_split32(c.x2);
    if (k > value_limit) {
        throw overflow_error("search value exceeds the 32-bit budget; instance too large");
    }
    return static_cast<int32_t>(k);
}

/// Admissible bound on the best completion value from the current state at
/// (a,b): a dynamic program over the remaining rectangle where the entry a
/// completion appends at index s of x1 is replaced by the largest value any
/// completion could have produced there (cumulative max over the second
/// coordinate at append time), and symmetrically for x2. Pointwise >= every
/// real completion by induction over the grid. Grid values are monotone in
/// each coordinate, so any cell reaching `stop_at` settles the comparison
/// against the incumbent early.
int32_t completion_bound(SearchCtx& c, int64_t a, int64_t b, int32_t stop_at) {
    const int64_t P = c.l1 - a + 1;
    const int64_t Q = c.l2 - b + 1;
    const size_t sp = c.stride_p;
    const size_t sq = c.stride_q;
    const int32_t* x1 = c.x1.data();
    const int32_t* x2 = c.x2.data();
    int32_t final_u = 0;

    for (int64_t dp = 0; dp < P; ++dp) {
        const int64_t p = a + dp;
        const int32_t* cap2_prev = dp > 0 ? &c.cap2[(dp - 1) * sq] : nullptr;
        int32_t* cap2_row = &c.cap2[dp * sq];
        for (int64_t dq = 0; dq < Q; ++dq) {
            const int64_t q = b + dq;
            const int32_t* cap1_row = &c.cap1[dq * sp];

            // min over j1+j2 = p-1 of e1(j1)+e1(j2), e1 = exact x1 below a,
            // cap1_row[s-a] from index a on.
            const int64_t t1 = p - 1;
            int32_t m1;
            {
                int32_t best = INT32_MAX;
                // both exact
                const int64_t lo = std::max<int64_t>(0, t1 - (a - 1));
                const int64_t hi = std::min<int64_t>(t1 / 2, a - 1);
                for (int64_t j = lo; j <= hi; ++j) {
                    int32_t cand = x1[j] + x1[t1 - j];
                    if (cand < best) best = cand;
                }
                // exact low + capped high
                const int64_t hi2 = std::min<int64_t>(a - 1, std::min(t1 - a, t1 / 2));
                for (int64_t j = 0; j <= hi2; ++j) {
                    int32_t cand = x1[j] + cap1_row[t1 - j - a];
                    if (cand < best) best = cand;
                }
                // both capped
                for (int64_t j = a; j <= t1 / 2; ++j) {
                    int32_t cand = cap1_row[j - a] + cap1_row[t1 - j - a];
                    if (cand < best) best = cand;
                }
                m1 = best;
            }
            const int64_t t2 = q - 1;
            int32_t m2;
            {
                int32_t best = INT32_MAX;
                const int64_t lo = std::max<int64_t>(0, t2 - (b - 1));
                const int64_t hi = std::min<int64_t>(t2 / 2, b - 1);
                for (int64_t t = lo; t <= hi; ++t) {
                    int32_t cand = x2[t] + x2[t2 - t];
                    if (cand < best) best = cand;
                }
                const int64_t hi2 = std::min<int64_t>(b - 1, std::min(t2 - b, t2 / 2));
                for (int64_t t = 0; t <= hi2; ++t) {
                    int32_t cand = x2[t] + cap2_row[t2 - t - b];
                    if (cand < best) best = cand;
                }
                for (int64_t t = b; t <= t2 / 2; ++t) {
                    int32_t cand = cap2_row[t - b] + cap2_row[t2 - t - b];
                    if (cand < best) best = cand;
                }
                m2 = best;
            }

            int32_t val = 1 + m1 + m2;
            if (val > bound_sat) val = bound_sat;
            if (val >= stop_at) return val;
            if (dp == P - 1 && dq == Q - 1) {
                final_u = val;
            }
            if (dp < P - 1) {
                int32_t prev = dq > 0 ? c.cap1[(dq - 1) * sp + dp] : 0;
                c.cap1[dq * sp + dp] = std::max(val, prev);
            }
            if (dq < Q - 1) {
                cap2_row[dq] = std::max(val, dp > 0 ? cap2_prev[dq] : 0);
            }
        }
    }
    return final_u;
}

void dfs(SearchCtx& c, int64_t a, int64_t b);

// One lattice direction exhausted; the completion is forced.
void forced_tail(SearchCtx& c, int64_t a, int64_t b, int32_t k) {
    const std::uint8_t dir = a < c.l1 ? 1 : 2;
    auto& xs = dir == 1 ? c.x1 : c.x2;
    const int64_t rem = dir == 1 ? c.l1 - a : c.l2 - b;
    const size_t base = xs.size();
    int32_t cur = k;
    for (int64_t i = 0; i < rem; ++i) {
        xs.push_back(cur);
        ++c.counters.nodes_expanded;
        int64_t next = 1 + static_cast<int64_t>(min_split32(c.x1)) + min_split32(c.x2);
        if (next > value_limit) {
            xs.resize(base);
            throw overflow_error("search value exceeds the 32-bit budget; instance too large");
        }
        cur = static_cast<int32_t>(next);
    }
    xs.resize(base);
    std::vector<std::uint8_t> tail(static_cast<size_t>(rem), dir);
    note_leaf(c, cur, tail.data(), tail.size());
}

// Dominance filter over per-point state frontiers (optional; see README on
// why it is off by default: states at a shared lattice point are virtually
// never pointwise comparable, so the filter buys nothing).
bool dominance_prune(SearchCtx& c, int64_t a, int64_t b) {
    const std::uint32_t key = static_cast<std::uint32_t>(a) << 16 | static_cast<std::uint32_t>(b);
    auto& entries = c.frontiers[key];
    const size_t n1 = c.x1.size() - 1;
    const size_t n2 = c.x2.size() - 1;
    const int32_t cl1 = c.x1.back();
    const int32_t cl2 = c.x2.back();
    const int64_t csum = c.sum1 + c.sum2;

    for (size_t i = 0; i < entries.size();) {
        FrontierEntry& e = entries[i];
        if (e.last1 >= cl1 && e.last2 >= cl2 && e.sum >= csum) {
            bool ge = true;
            for (size_t j = n1; ge && j-- > 0;) ge = e.state[j] >= c.x1[j + 1];
            for (size_t j = n2; ge && j-- > 0;) ge = e.state[n1 + j] >= c.x2[j + 1];
            if (ge) {
                ++c.counters.nodes_pruned_dominance;
                e.stamp = ++c.stamp_clock;
                return true;
            }
        }
        if (e.last1 <= cl1 && e.last2 <= cl2 && e.sum <= csum) {
            bool le = true;
            for (size_t j = n1; le && j-- > 0;) le = e.state[j] <= c.x1[j + 1];
            for (size_t j = n2; le && j-- > 0;) le = e.state[n1 + j] <= c.x2[j + 1];
            if (le) {
                entries[i] = std::move(entries.back());
                entries.pop_back();
                --c.counters.frontier_entries;
                continue;
            }
        }
        ++i;
    }
    if (entries.size() >= c.opt.frontier_cap_per_point) {
        size_t victim = 0;
        for (size_t i = 1; i < entries.size(); ++i) {
            if (entries[i].stamp < entries[victim].stamp) victim = i;
        }
        entries[victim] = std::move(entries.back());
        entries.pop_back();
        --c.counters.frontier_entries;
        ++c.counters.frontier_evicted;
    }
    FrontierEntry e;
    e.state.reserve(n1 + n2);
    e.state.insert(e.state.end(), c.x1.begin() + 1, c.x1.end());
    e.state.insert(e.state.end(), c.x2.begin() + 1, c.x2.end());
    e.last1 = cl1;
    e.last2 = cl2;
    e.sum = csum;
    e.stamp = ++c.stamp_clock;
    entries.push_back(std::move(e));
    ++c.counters.frontier_entries;
    return false;
}

void dfs(SearchCtx& c, int64_t a, int64_t b) {
    const int32_t k = node_value(c);
    ++c.counters.nodes_expanded;

    if (a == c.l1 && b == c.l2) {
        note_leaf(c, k, nullptr, 0);
        return;
    }
    if (a == c.l1 || b == c.l2) {
        forced_tail(c, a, b, k);
        return;
    }

    const int64_t inc = c.load_incumbent();
    const int32_t stop_at =
        static_cast<int32_t>(c.witness_mode ? inc : std::min<int64_t>(inc + 1, bound_sat));
    const int32_t bound = completion_bound(c, a, b, stop_at);
    if (c.witness_mode ? bound < inc : bound <= inc) {
        ++c.counters.nodes_pruned_bound;
        return;
    }
    if (c.opt.use_dominance && dominance_prune(c, a, b)) {
        return;
    }

    c.x1.push_back(k);
    c.sum1 += k;
    c.prefix.push_back(1);
    dfs(c, a + 1, b);
    c.prefix.pop_back();
    c.sum1 -= k;
    c.x1.pop_back();

    c.x2.push_back(k);
    c.sum2 += k;
    c.prefix.push_back(2);
    dfs(c, a, b + 1);
    c.prefix.pop_back();
    c.sum2 -= k;
    c.x2.pop_back();
}

void validate_targets_pair(int64_t l1, int64_t l2) {
    if (l1 < 1 || l2 < 1) throw validation_error("path targets must be >= 1");
    if (l1 >= (1 << 14) || l2 >= (1 << 14)) {
        throw validation_error("path targets above 16383 are not supported");
    }
}

// Real walk values only: the maximum over walks with at most three runs per
// color, in both starting orientations. This family contains the greedy walk
// and the known low-run maximizers of the irregular symmetric instances.
int64_t seed_incumbent(int64_t l1, int64_t l2) {
    std::vector<int32_t> x1, x2;
    auto eval_runs = [&](const std::array<std::pair<int, int64_t>, 6>& runs) {
        x1.assign(1, 0);
        x2.assign(1, 0);
        int64_t k = 1;
        for (const auto& [color, len] : runs) {
            for (int64_t i = 0; i < len; ++i) {
                k = 1 + static_cast<int64_t>(min_split32(x1)) + min_split32(x2);
                if (k > value_limit) throw overflow_error("seed walk value exceeds the 32-bit budget");
                (color == 1 ? x1 : x2).push_back(static_cast<int32_t>(k));
            }
        }
        return 1 + static_cast<int64_t>(min_split32(x1)) + min_split32(x2);
    };

    // Keep the seed enumeration around a million walks on big instances by
    // dropping to two runs per color there.
    const bool three_runs = l1 * l1 * l2 * l2 <= (int64_t(1) << 26);
    std::vector<std::array<int64_t, 3>> comp1, comp2;
    auto compositions = [&](int64_t total, std::vector<std::array<int64_t, 3>>& out) {
        for (int64_t u = 0; u <= total; ++u) {
            if (three_runs) {
                for (int64_t v = 0; u + v <= total; ++v) out.push_back({u, v, total - u - v});
            } else {
                out.push_back({u, total - u, 0});
            }
        }
    };
    compositions(l1 - 1, comp1);
    compositions(l2 - 1, comp2);

    int64_t best = 0;
    for (const auto& c1 : comp1) {
        for (const auto& c2 : comp2) {
            best = std::max(best, eval_runs({{{1, c1[0]},
                                              {2, c2[0]},
                                              {1, c1[1]},
                                              {2, c2[1]},
                                              {1, c1[2]},
                                              {2, c2[2]}}}));
            best = std::max(best, eval_runs({{{2, c2[0]},
                                              {1, c1[0]},
                                              {2, c2[1]},
                                              {1, c1[1]},
                                              {2, c2[2]},
                                              {1, c1[2]}}}));
        }
    }
    return best;
}

void finalize_witnesses(SearchReport& report, std::vector<std::vector<std::uint8_t>> raw,
                        bool truncated, bool mirror, size_t cap) {
    if (mirror) {
        const size_t n = raw.size();
        for (size_t i = 0; i < n; ++i) {
            std::vector<std::uint8_t> swapped(raw[i]);
            for (auto& e : swapped) e = static_cast<std::uint8_t>(3 - e);
            raw.push_back(std::move(swapped));
        }
    }
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    if (raw.size() > cap) {
        raw.resize(cap);
        truncated = true;
    }
    report.witnesses_truncated = truncated;
    for (auto& entries : raw) {
        report.witnesses.push_back(walks::StrategyWalk::from_raw(2, std::move(entries)));
    }
}

std::vector<std::vector<std::uint8_t>> split_prefixes(int64_t l1, int64_t l2,
                                                      bool symmetric_halving, size_t want) {
    std::vector<std::vector<std::uint8_t>> tasks;
    std::vector<std::uint8_t> cur;
    int64_t depth_target = 1;
    // Color 1 first keeps the task list lexicographic; with symmetric halving
    // the first entry is pinned to color 1.
    while (true) {
        tasks.clear();
        cur.clear();
        auto rec = [&](auto&& self, int64_t ones, int64_t twos) -> void {
            if (static_cast<int64_t>(cur.size()) == depth_target ||
                (ones == l1 - 1 && twos == l2 - 1)) {
                tasks.push_back(cur);
                return;
            }
            if (ones < l1 - 1) {
                cur.push_back(1);
                self(self, ones + 1, twos);
                cur.pop_back();
            }
            if (twos < l2 - 1 && !(symmetric_halving && cur.empty())) {
                cur.push_back(2);
                self(self, ones, twos + 1);
                cur.pop_back();
            }
        };
        rec(rec, 0, 0);
        if (tasks.size() >= want || depth_target >= l1 + l2 - 2) break;
        ++depth_target;
    }
    return tasks;
}

}  // namespace

SearchReport kstar_branch_and_bound(int64_t l1, int64_t l2, const SearchOptions& options) {
    validate_targets_pair(l1, l2);
    auto t0 = std::chrono::steady_clock::now();

    SearchReport report;
    report.l1 = l1;
    report.l2 = l2;
    report.method = "branch-and-bound";

    const int64_t d = (l1 - 1) + (l2 - 1);
    if (d == 0) {
        report.kstar = 1;
        if (options.collect_witnesses) {
            report.witnesses.push_back(walks::StrategyWalk::from_raw(2, {}));
        }
        report.counters.nodes_expanded = 1;
        return report;
    }

    const bool symmetric_halving = l1 == l2;
    std::atomic<int64_t> incumbent{seed_incumbent(l1, l2)};

    int workers = std::max(1, options.workers);
    std::vector<std::vector<std::uint8_t>> tasks;
    if (workers > 1) {
        tasks = split_prefixes(l1, l2, symmetric_halving, static_cast<size_t>(workers) * 16);
        if (tasks.size() < 2) workers = 1;
    }
    if (workers == 1) {
        tasks.clear();
        if (symmetric_halving) {
            tasks.push_back({1});
        } else {
            tasks.push_back({});
        }
    }

    auto make_ctx = [&]() {
        SearchCtx c;
        c.l1 = l1;
        c.l2 = l2;
        c.opt = options;
        c.witness_mode = options.collect_witnesses;
        c.incumbent = &incumbent;
        c.stride_p = static_cast<size_t>(l1) + 1;
        c.stride_q = static_cast<size_t>(l2) + 1;
        c.cap1.assign(c.stride_p * c.stride_q, 0);
        c.cap2.assign(c.stride_p * c.stride_q, 0);
        return c;
    };

    auto run_from_prefix = [&](SearchCtx& c, const std::vector<std::uint8_t>& prefix) {
        c.x1.assign(1, 0);
        c.x2.assign(1, 0);
        c.sum1 = c.sum2 = 0;
        c.prefix.clear();
        int64_t a = 1, b = 1;
        for (std::uint8_t dir : prefix) {
            int32_t k = node_value(c);
            ++c.counters.nodes_expanded;
            if (dir == 1) {
                c.x1.push_back(k);
                c.sum1 += k;
                ++a;
            } else {
                c.x2.push_back(k);
                c.sum2 += k;
                ++b;
            }
            c.prefix.push_back(dir);
        }
        dfs(c, a, b);
    };

    std::vector<SearchCtx> ctxs;
    if (workers == 1) {
        ctxs.push_back(make_ctx());
        run_from_prefix(ctxs[0], tasks[0]);
    } else {
        ctxs.reserve(static_cast<size_t>(workers));
        for (int i = 0; i < workers; ++i) ctxs.push_back(make_ctx());
        std::atomic<size_t> next{0};
        std::vector<std::thread> threads;
        std::vector<std::exception_ptr> errors(static_cast<size_t>(workers));
        for (int i = 0; i < workers; ++i) {
            threads.emplace_back([&, i]() {
                try {
                    for (;;) {
                        size_t t = next.fetch_add(1);
                        if (t >= tasks.size()) break;
                        run_from_prefix(ctxs[static_cast<size_t>(i)], tasks[t]);
                    }
                } catch (...) {
                    errors[static_cast<size_t>(i)] = std::current_exception();
                }
            });
        }
        for (auto& th : threads) th.join();
        for (auto& err : errors) {
            if (err) std::rethrow_exception(err);
        }
    }

    const int64_t kstar = incumbent.load();
    SearchCounters totals;
    int64_t best_seen = 0;
    std::vector<std::vector<std::uint8_t>> collected;
    bool truncated = false;
    for (auto& c : ctxs) {
        totals.nodes_expanded += c.counters.nodes_expanded;
        totals.nodes_pruned_bound += c.counters.nodes_pruned_bound;
        totals.nodes_pruned_dominance += c.counters.nodes_pruned_dominance;
        totals.frontier_entries += c.counters.frontier_entries;
        totals.frontier_evicted += c.counters.frontier_evicted;
        best_seen = std::max(best_seen, c.local_best);
        if (options.collect_witnesses && c.local_best == kstar) {
            truncated = truncated || c.best_truncated;
            for (auto& w : c.best_walks) collected.push_back(std::move(w));
        }
    }
    if (options.collect_witnesses && !options.use_dominance && best_seen != kstar) {
        throw internal_error("branch-and-bound bookkeeping lost the maximum");
    }

    report.kstar = kstar;
    report.counters = totals;
    if (options.collect_witnesses) {
        finalize_witnesses(report, std::move(collected), truncated, symmetric_halving,
                           options.witness_cap);
    }
    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

SearchReport kstar_exhaustive(int64_t l1, int64_t l2, const SearchOptions& options) {
    validate_targets_pair(l1, l2);
    auto t0 = std::chrono::steady_clock::now();

    int128 count = walks::walk_count({l1, l2});
    if (count > static_cast<int128>(options.exhaustive_cap)) {
        throw validation_error("exhaustive search refused: |W(" + std::to_string(l1) + "," +
                               std::to_string(l2) + ")| = " + dec_string(count) +
                               " exceeds the cap of " + std::to_string(options.exhaustive_cap));
    }

    SearchReport report;
    report.l1 = l1;
    report.l2 = l2;
    report.method = "exhaustive";

    std::vector<int32_t> x1{0};
    std::vector<int32_t> x2{0};
    std::vector<std::uint8_t> prefix;
    int64_t best = 0;
    std::vector<std::vector<std::uint8_t>> witnesses;
    bool truncated = false;
    uint64_t nodes = 0;

    auto rec = [&](auto&& self, int64_t a, int64_t b) -> void {
        ++nodes;
        int64_t k = 1 + static_cast<int64_t>(min_split32(x1)) + min_split32(x2);
        if (k > value_limit) throw overflow_error("search value exceeds the 32-bit budget");
        if (a == l1 && b == l2) {
            if (k > best) {
                best = k;
                witnesses.clear();
                truncated = false;
            }
            if (k == best && options.collect_witnesses) {
                if (witnesses.size() < options.witness_cap) {
                    witnesses.push_back(prefix);
                } else {
                    truncated = true;
                }
            }
            return;
        }
        if (a < l1) {
            x1.push_back(static_cast<int32_t>(k));
            prefix.push_back(1);
            self(self, a + 1, b);
            prefix.pop_back();
            x1.pop_back();
        }
        if (b < l2) {
            x2.push_back(static_cast<int32_t>(k));
            prefix.push_back(2);
            self(self, a, b + 1);
            prefix.pop_back();
            x2.pop_back();
        }
    };
    rec(rec, 1, 1);

    report.kstar = best;
    report.counters.nodes_expanded = nodes;
    finalize_witnesses(report, std::move(witnesses), truncated, false, options.witness_cap);
    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

GrowthRate mstar_of_kstar(int128 kstar) {
    if (kstar < 1) throw validation_error("k* must be a positive integer");
    return GrowthRate(kstar - 1, kstar);
}

const std::array<std::int64_t, 46> kstar_symmetric_table = [] {
    std::array<std::int64_t, 46> t{};
    for (std::int64_t ell = 2; ell <= 27; ++ell) t[static_cast<size_t>(ell)] = ell * ell;
    t[28] = 791;
    t[29] = 841;
    t[30] = 902;
    t[31] = 961;
    t[32] = 1040;
    t[33] = 1089;
    t[34] = 1156;
    t[35] = 1225;
    t[36] = 1323;
    t[37] = 1376;
    t[38] = 1449;
    t[39] = 1521;
    t[40] = 1641;
    t[41] = 1699;
    t[42] = 1796;
    t[43] = 1856;
    t[44] = 1991;
    t[45] = 2057;
    return t;
}();

std::vector<TableCheckRow> verify_table(std::int64_t max_ell, const SearchOptions& options) {
    if (max_ell < 2 || max_ell > 45) {
        throw validation_error("verify_table supports 2 <= max_ell <= 45");
    }
    std::vector<TableCheckRow> rows;
    for (std::int64_t ell = 2; ell <= max_ell; ++ell) {
        SearchOptions opts = options;
        opts.collect_witnesses = false;
        SearchReport r = kstar_branch_and_bound(ell, ell, opts);
        TableCheckRow row;
        row.ell = ell;
        row.computed = r.kstar;
        row.expected = kstar_symmetric_table[static_cast<size_t>(ell)];
        row.ok = r.kstar == row.expected;
        rows.push_back(row);
    }
    return rows;
}

nlohmann::json report_to_json(const SearchReport& report) {
    nlohmann::json j;
    j["l1"] = report.l1;
    j["l2"] = report.l2;
    j["kstar"] = dec_string(report.kstar);
    nlohmann::json w = nlohmann::json::array();
    for (const auto& walk : report.witnesses) w.push_back(walks::to_run_length(walk));
    j["witnesses"] = w;
    j["witnesses_truncated"] = report.witnesses_truncated;
    j["nodes"] = {{"expanded", report.counters.nodes_expanded},
                  {"pruned_bound", report.counters.nodes_pruned_bound},
                  {"pruned_dominance", report.counters.nodes_pruned_dominance},
                  {"frontier_entries", report.counters.frontier_entries},
                  {"frontier_evicted", report.counters.frontier_evicted}};
    j["method"] = report.method;
    return j;
}

}  // namespace pathram::solver
