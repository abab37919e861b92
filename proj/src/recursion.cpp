#include "pathram/recursion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace pathram::recursion {

namespace {

// Values are appended monotonically; capping each k_i well below the type
// maximum keeps every intermediate sum representable without per-add checks.
constexpr int128 k_limit_128 = int128(1) << 110;
constexpr std::int64_t k_limit_64 = std::int64_t(1) << 61;

template <typename Int>
Int min_split(const std::vector<Int>& seq, std::int64_t total) {
    // j1 <= j2 suffices: the sum is symmetric in (j1, j2).
    const Int* data = seq.data();
    Int best = data[0] + data[static_cast<std::size_t>(total)];
    for (std::int64_t j1 = 1; j1 <= total / 2; ++j1) {
        Int cand = data[j1] + data[total - j1];
        if (cand < best) best = cand;
    }
    return best;
}

template <typename Int, Int Limit>
void evaluate_into(const walks::StrategyWalk& walk, std::vector<Int>& k_values,
                   std::vector<std::vector<Int>>& x) {
    const auto& entries = walk.entries();
    const auto& targets = walk.targets();
    const int colors = walk.colors();
    const std::int64_t d = walk.length();

    k_values.clear();
    k_values.reserve(static_cast<std::size_t>(d) + 1);
    x.assign(static_cast<std::size_t>(colors), {});
    for (int s = 0; s < colors; ++s) {
        x[static_cast<std::size_t>(s)].reserve(static_cast<std::size_t>(targets[static_cast<std::size_t>(s)]));
        x[static_cast<std::size_t>(s)].push_back(0);
    }

    for (std::int64_t i = 0; i <= d; ++i) {
        Int k = 1;
        for (int s = 0; s < colors; ++s) {
            const auto& xs = x[static_cast<std::size_t>(s)];
            k += min_split<Int>(xs, static_cast<std::int64_t>(xs.size()) - 1);
        }
        if (k > Limit) {
            throw overflow_error("recursion value exceeds integer width at step " + std::to_string(i));
        }
        k_values.push_back(k);
        if (i < d) {
            x[static_cast<std::size_t>(entries[static_cast<std::size_t>(i)] - 1)].push_back(k);
        }
    }
}

// Whole-trace bound k(alpha) <= min(l1,l2)^{log2 3} * max(l1,l2); every
// intermediate k_i is a prefix value and obeys the same bound. Used only to
// pick the narrow arithmetic fast path; the fast path still guards its cap.
bool fits_int64(const walks::StrategyWalk& walk) {
    if (walk.colors() != 2) return false;
    double lo = static_cast<double>(std::min(walk.targets()[0], walk.targets()[1]));
    double hi = static_cast<double>(std::max(walk.targets()[0], walk.targets()[1]));
    double bound = std::pow(lo, 1.585) * hi * 8.0;
    return bound < 4.0e18;
}

}  // namespace

int128 min_split_sum(const std::vector<int128>& seq, std::int64_t total) {
    // Needs 0 and total to be valid indices: j1 + j2 = total with both inside.
    if (seq.empty() || total < 0 || total >= static_cast<std::int64_t>(seq.size())) {
        throw validation_error("min_split_sum: split total out of range");
    }
    return min_split<int128>(seq, total);
}

RecursionTrace evaluate(const walks::StrategyWalk& walk) {
    RecursionTrace trace;
    trace.walk = walk;
    if (fits_int64(walk)) {
        std::vector<std::int64_t> k64;
        std::vector<std::vector<std::int64_t>> x64;
        evaluate_into<std::int64_t, k_limit_64>(walk, k64, x64);
        trace.k_values.assign(k64.begin(), k64.end());
        trace.x.resize(x64.size());
        for (std::size_t s = 0; s < x64.size(); ++s) {
            trace.x[s].assign(x64[s].begin(), x64[s].end());
        }
    } else {
        evaluate_into<int128, k_limit_128>(walk, trace.k_values, trace.x);
    }
    return trace;
}

int128 k_of_walk(const walks::StrategyWalk& walk) {
    return evaluate(walk).k_final();
}

namespace {

void require_two_colors(const walks::StrategyWalk& walk, const char* op) {
    if (walk.colors() != 2) {
        throw validation_error(std::string(op) + " is only defined for two colors, got r=" +
                               std::to_string(walk.colors()));
    }
}

int128 beta_from_trace(const RecursionTrace& trace) {
    const auto& x2 = trace.x[1];
    return 1 + min_split<int128>(x2, static_cast<std::int64_t>(x2.size()) - 1);
}

}  // namespace

int128 beta_of_walk(const walks::StrategyWalk& walk) {
    require_two_colors(walk, "beta_of_walk");
    return beta_from_trace(evaluate(walk));
}

GrowthRate delta_of_walk(const walks::StrategyWalk& walk) {
    require_two_colors(walk, "delta_of_walk");
    RecursionTrace trace = evaluate(walk);
    int128 beta = beta_from_trace(trace);
    const auto& x1 = trace.x[0];
    GrowthRate best(x1[0] + beta, 1);
    for (std::size_t j = 1; j < x1.size(); ++j) {
        GrowthRate cand(x1[j] + beta, static_cast<int128>(j) + 1);
        if (cand < best) best = cand;
    }
    return best;
}

nlohmann::json trace_to_json(const RecursionTrace& trace) {
    nlohmann::json j;
    j["walk"] = walks::to_run_length(trace.walk);
    j["colors"] = trace.walk.colors();
    nlohmann::json targets = nlohmann::json::array();
    for (auto t : trace.walk.targets()) targets.push_back(t);
    j["targets"] = targets;
    nlohmann::json k = nlohmann::json::array();
    for (int128 v : trace.k_values) k.push_back(dec_string(v));
    j["k"] = k;
    for (std::size_t s = 0; s < trace.x.size(); ++s) {
        nlohmann::json xs = nlohmann::json::array();
        for (int128 v : trace.x[s]) xs.push_back(dec_string(v));
        j["x" + std::to_string(s + 1)] = xs;
    }
    return j;
}

}  // namespace pathram::recursion
