#pragma once

#include <cstdint>
#include <vector>

#include "pathram/common.hpp"
#include "pathram/rational.hpp"
#include "pathram/walks.hpp"

#include "json.hpp"

namespace pathram::asymptotics {

/// x_n = beta + min over j1+j2 = n-1 of x_{j1} + x_{j2}, extended from an
/// arbitrary integer prefix. Returns x_0..x_n.
std::vector<int128> extend_recurrence(const std::vector<int128>& prefix, int128 beta,
                                      std::int64_t n);

/// The long-run behaviour of the extension: the first differences become
/// periodic with period p+1, growing by x_p + beta per period, where p is the
/// smallest index minimizing (x_j + beta)/(j+1) over the prefix.
struct PeriodAnalysis {
    std::vector<int128> prefix;
    int128 beta = 0;
    std::int64_t p = 0;
    std::int64_t period_length = 1;  // p + 1
    int128 increment = 0;            // x_p + beta
    GrowthRate delta;                // (x_p + beta) / (p + 1), reduced
    std::int64_t onset = 0;          // smallest index from which the window sums stabilize
};

PeriodAnalysis period_analysis(const std::vector<int128>& prefix, int128 beta,
                               std::int64_t extension_cap = 1'000'000);

nlohmann::json period_to_json(const PeriodAnalysis& analysis);

/// The explicit two-color walk families with rates converging to the exact
/// growth constants for c = 4, 5, 6; scale parameter t >= 0 gives the
/// floor-rounded coordinates at precision 10^t.
walks::StrategyWalk delta_family(int c, int t);

/// Nested near-optimal walks for c = 4^t built from scale factor s and ratio
/// q with s*q integral.
struct BootstrapParams {
    GrowthRate q;
    std::int64_t s = 0;
    int t = 0;
    bool below_recommended_s = false;  // s < 100: construction fine, rate analysis degraded

    static BootstrapParams make(const GrowthRate& q, std::int64_t s, int t);
};

walks::StrategyWalk bootstrap_walk(const BootstrapParams& params);

/// f(q,s) = min{3 + q - 14/s, 2 + 3/q - 20/(q s)}, the per-level rate factor
/// of the bootstrap construction; exact rational.
GrowthRate bootstrap_rate(const GrowthRate& q, std::int64_t s);

/// The symmetric-game walk: bootstrap walk for q = 13/10, s = 320 extended to
/// a square endpoint 10 * 416^t.
walks::StrategyWalk symmetric_lb_walk(int t);

/// Coordinates of the symmetric walk without materializing it.
int128 symmetric_lb_target(int t);

/// k <= c^(log2 3) * ell, decided in extended precision with a guard band;
/// throws internal_error when the comparison lands inside the band.
bool leq_growth_ceiling(int128 k, std::int64_t c, std::int64_t ell);

}  // namespace pathram::asymptotics
