#pragma once

#include <vector>

#include "pathram/common.hpp"
#include "pathram/rational.hpp"
#include "pathram/walks.hpp"

#include "json.hpp"

namespace pathram::recursion {

/// The integer recursion evaluated along a walk: k_0..k_d plus the per-color
/// sequences x_s = (x_{s,0},...,x_{s,l_s-1}) collecting the k values at the
/// steps taken in direction s.
struct RecursionTrace {
    walks::StrategyWalk walk;
    std::vector<int128> k_values;             // size d+1
    std::vector<std::vector<int128>> x;       // x[s-1] has size l_s

    int128 k_final() const { return k_values.back(); }
};

RecursionTrace evaluate(const walks::StrategyWalk& walk);

/// k(alpha) = k_d, the tree size at which Builder beats the strategy walk.
int128 k_of_walk(const walks::StrategyWalk& walk);

/// beta(alpha) = 1 + min over j1+j2 = c-1 of x_{2,j1} + x_{2,j2}.
/// Two colors only; the walk lives in W(l, c).
int128 beta_of_walk(const walks::StrategyWalk& walk);

/// delta(alpha) = min over 0 <= j <= l-1 of (x_{1,j} + beta(alpha)) / (j+1),
/// exact rational. Two colors only.
GrowthRate delta_of_walk(const walks::StrategyWalk& walk);

/// Trace export: walk in run-length form, all integers as decimal strings.
nlohmann::json trace_to_json(const RecursionTrace& trace);

/// min over j1,j2 >= 0 with j1+j2 = total of seq[j1] + seq[j2]; total must be
/// representable with indices inside the sequence.
int128 min_split_sum(const std::vector<int128>& seq, std::int64_t total);

}  // namespace pathram::recursion
