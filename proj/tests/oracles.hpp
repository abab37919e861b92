#pragma once

// Reference implementations used as independent oracles by the test suites.
// Everything here is written directly from the defining formulas, with no
// shared code paths into the library.

#include <cstdint>
#include <vector>

#include "pathram/common.hpp"

namespace oracles {

using pathram::int128;

// min over all ordered pairs j1+j2 = total (full scan, no symmetry shortcut)
inline int128 ref_min_split(const std::vector<int128>& x, std::int64_t total) {
    int128 best = x[0] + x[static_cast<std::size_t>(total)];
    for (std::int64_t j1 = 0; j1 <= total; ++j1) {
        int128 cand = x[static_cast<std::size_t>(j1)] + x[static_cast<std::size_t>(total - j1)];
        if (cand < best) best = cand;
    }
    return best;
}

struct RefTrace {
    std::vector<int128> k;
    std::vector<std::vector<int128>> x;
};

// The walk recursion, straight from its definition.
inline RefTrace ref_evaluate(int colors, const std::vector<int>& entries) {
    RefTrace trace;
    trace.x.assign(static_cast<std::size_t>(colors), {0});
    std::vector<std::int64_t> pos(static_cast<std::size_t>(colors), 1);
    const std::int64_t d = static_cast<std::int64_t>(entries.size());
    for (std::int64_t i = 0; i <= d; ++i) {
        int128 k = 1;
        for (int s = 0; s < colors; ++s) {
            k += ref_min_split(trace.x[static_cast<std::size_t>(s)], pos[static_cast<std::size_t>(s)] - 1);
        }
        trace.k.push_back(k);
        if (i < d) {
            int s = entries[static_cast<std::size_t>(i)] - 1;
            trace.x[static_cast<std::size_t>(s)].push_back(k);
            ++pos[static_cast<std::size_t>(s)];
        }
    }
    return trace;
}

inline int128 ref_k_of_walk(int colors, const std::vector<int>& entries) {
    return ref_evaluate(colors, entries).k.back();
}

// Walk count by direct recursive enumeration (small instances only).
inline int128 ref_walk_count(std::vector<std::int64_t> remaining) {
    bool done = true;
    for (auto r : remaining) {
        if (r > 0) done = false;
    }
    if (done) return 1;
    int128 total = 0;
    for (std::size_t s = 0; s < remaining.size(); ++s) {
        if (remaining[s] == 0) continue;
        --remaining[s];
        total += ref_walk_count(remaining);
        ++remaining[s];
    }
    return total;
}

// The abstract extension recurrence, straight from its definition.
inline std::vector<int128> ref_extend(std::vector<int128> x, int128 beta, std::int64_t n) {
    while (static_cast<std::int64_t>(x.size()) <= n) {
        std::int64_t total = static_cast<std::int64_t>(x.size()) - 1;
        x.push_back(beta + ref_min_split(x, total));
    }
    return x;
}

}  // namespace oracles
