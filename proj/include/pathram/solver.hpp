#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pathram/common.hpp"
#include "pathram/rational.hpp"
#include "pathram/walks.hpp"

#include "json.hpp"

namespace pathram::solver {

struct SearchCounters {
    std::uint64_t nodes_expanded = 0;
    std::uint64_t nodes_pruned_bound = 0;
    std::uint64_t nodes_pruned_dominance = 0;
    std::uint64_t frontier_entries = 0;   // live dominance-frontier entries at the end
    std::uint64_t frontier_evicted = 0;   // entries dropped by the per-point cap
};

struct SearchReport {
    std::int64_t l1 = 0;
    std::int64_t l2 = 0;
    int128 kstar = 0;
    std::vector<walks::StrategyWalk> witnesses;  // lexicographically smallest first
    bool witnesses_truncated = false;
    SearchCounters counters;
    double wall_seconds = 0.0;
    std::string method;
};

struct SearchOptions {
    int workers = 1;
    std::size_t witness_cap = 16;
    bool collect_witnesses = true;
    std::uint64_t exhaustive_cap = 100'000'000;  // refuse larger exhaustive runs
    bool use_dominance = false;                  // see README: measurably inert on this recursion
    std::size_t frontier_cap_per_point = 1u << 14;
};

/// Exact maximum of k(alpha) over every walk in W(l1,l2), by enumeration.
/// Refuses (with the exact walk count in the message) when the space exceeds
/// options.exhaustive_cap.
SearchReport kstar_exhaustive(std::int64_t l1, std::int64_t l2, const SearchOptions& options = {});

/// Same maximum via depth-first search with an admissible completion bound
/// and dominance pruning over per-lattice-point state frontiers. With
/// collect_witnesses the witness list is complete up to witness_cap.
SearchReport kstar_branch_and_bound(std::int64_t l1, std::int64_t l2,
                                    const SearchOptions& options = {});

/// m*(F,r) = (k*-1)/k* for forests.
GrowthRate mstar_of_kstar(int128 kstar);

/// Known exact values of k*(P_l,2); index by l, valid for 2 <= l <= 45.
extern const std::array<std::int64_t, 46> kstar_symmetric_table;

struct TableCheckRow {
    std::int64_t ell = 0;
    int128 computed = 0;
    std::int64_t expected = 0;
    bool ok = false;
};

/// Recomputes k*(P_l,2) for every l <= max_ell and compares against the
/// embedded table. Failures are data, not errors.
std::vector<TableCheckRow> verify_table(std::int64_t max_ell, const SearchOptions& options = {});

nlohmann::json report_to_json(const SearchReport& report);

}  // namespace pathram::solver
