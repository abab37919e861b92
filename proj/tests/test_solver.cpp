#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "pathram/recursion.hpp"
#include "pathram/solver.hpp"
#include "pathram/walks.hpp"

using namespace pathram;
using walks::StrategyWalk;

TEST_CASE("the smallest symmetric instance") {
    auto report = solver::kstar_exhaustive(2, 2);
    CHECK(report.kstar == 4);
    REQUIRE(report.witnesses.size() == 2);
    CHECK(report.witnesses[0].entries() == std::vector<std::uint8_t>{1, 2});
    CHECK(report.witnesses[1].entries() == std::vector<std::uint8_t>{2, 1});

    auto bb = solver::kstar_branch_and_bound(2, 2);
    CHECK(bb.kstar == 4);
    CHECK(bb.witnesses.size() == 2);
}

TEST_CASE("single-color opponents force a single forced walk") {
    auto report = solver::kstar_exhaustive(7, 1);
    CHECK(report.kstar == 7);
    REQUIRE(report.witnesses.size() == 1);
    CHECK(report.witnesses[0] == walks::greedy_walk({7, 1}));

    CHECK(solver::kstar_branch_and_bound(1, 1).kstar == 1);
    CHECK(solver::kstar_branch_and_bound(1, 9).kstar == 9);
}

TEST_CASE("asymmetric instance within the published bounds") {
    auto report = solver::kstar_exhaustive(40, 4);
    CHECK(report.kstar >= 4 * 40);
    CHECK(report.kstar <= 172);  // floor(((sqrt(13)+5)/2) * 40)
}

TEST_CASE("branch-and-bound equals exhaustive with identical witness sets") {
    for (std::int64_t l1 = 1; l1 <= 8; ++l1) {
        for (std::int64_t l2 = 1; l1 + l2 <= 15; ++l2) {
            auto ex = solver::kstar_exhaustive(l1, l2);
            auto bb = solver::kstar_branch_and_bound(l1, l2);
            REQUIRE(ex.kstar == bb.kstar);
            if (!ex.witnesses_truncated && !bb.witnesses_truncated) {
                REQUIRE(ex.witnesses.size() == bb.witnesses.size());
                for (std::size_t i = 0; i < ex.witnesses.size(); ++i) {
                    REQUIRE(ex.witnesses[i] == bb.witnesses[i]);
                }
            }
        }
    }
}

TEST_CASE("every witness attains the reported value and the greedy floor holds") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 12; ++trial) {
        std::int64_t l1 = 2 + static_cast<std::int64_t>(rng() % 7);
        std::int64_t l2 = 2 + static_cast<std::int64_t>(rng() % 7);
        auto report = solver::kstar_branch_and_bound(l1, l2);
        CHECK(report.kstar >= l1 * l2);
        for (const auto& w : report.witnesses) {
            REQUIRE(recursion::k_of_walk(w) == report.kstar);
        }
    }
}

TEST_CASE("the value is symmetric under swapping the targets") {
    for (auto [l1, l2] : {std::pair<std::int64_t, std::int64_t>{5, 9},
                          {3, 12},
                          {7, 10},
                          {2, 13}}) {
        CHECK(solver::kstar_branch_and_bound(l1, l2).kstar ==
              solver::kstar_branch_and_bound(l2, l1).kstar);
    }
}

TEST_CASE("asymmetric identities for small second targets") {
    for (std::int64_t c = 1; c <= 3; ++c) {
        for (std::int64_t ell = 1; ell <= 12; ++ell) {
            CHECK(solver::kstar_branch_and_bound(ell, c).kstar == c * ell);
        }
    }
}

TEST_CASE("value-only, dominance-enabled and parallel runs agree") {
    solver::SearchOptions value_only;
    value_only.collect_witnesses = false;
    solver::SearchOptions dominance;
    dominance.use_dominance = true;
    solver::SearchOptions parallel;
    parallel.workers = 2;

    for (auto [l1, l2] : {std::pair<std::int64_t, std::int64_t>{9, 9}, {6, 11}, {10, 7}}) {
        auto base = solver::kstar_branch_and_bound(l1, l2);
        CHECK(solver::kstar_branch_and_bound(l1, l2, value_only).kstar == base.kstar);
        CHECK(solver::kstar_branch_and_bound(l1, l2, dominance).kstar == base.kstar);
        auto par = solver::kstar_branch_and_bound(l1, l2, parallel);
        CHECK(par.kstar == base.kstar);
        REQUIRE(par.witnesses.size() == base.witnesses.size());
        for (std::size_t i = 0; i < par.witnesses.size(); ++i) {
            CHECK(par.witnesses[i] == base.witnesses[i]);
        }
    }
}

TEST_CASE("exhaustive search refuses oversized instances with the exact count") {
    solver::SearchOptions opts;
    opts.exhaustive_cap = 1000;
    CHECK_THROWS_WITH_AS(solver::kstar_exhaustive(8, 8, opts), doctest::Contains("3432"),
                         validation_error);
}

TEST_CASE("dominance of recursion states is sound for maximization") {
    // Monotonicity of the value recursion in its inputs: for synthetic state
    // pairs at the same lattice point with pointwise-dominated sequences,
    // every common completion gives a dominated final value.
    std::mt19937 rng(20260808);
    std::uniform_int_distribution<int> small(0, 4);
    int trials = 0;
    while (trials < 10000) {
        std::int64_t a = 2 + static_cast<std::int64_t>(rng() % 5);
        std::int64_t b = 2 + static_cast<std::int64_t>(rng() % 5);
        std::int64_t rem1 = 1 + static_cast<std::int64_t>(rng() % 5);
        std::int64_t rem2 = 1 + static_cast<std::int64_t>(rng() % 5);
        // d = (a-1)+(b-1)+rem1+rem2 <= 18
        if ((a - 1) + (b - 1) + rem1 + rem2 > 18) continue;
        ++trials;

        // strictly increasing upper state, dominated lower state
        std::vector<int128> hi1{0}, hi2{0}, lo1{0}, lo2{0};
        auto grow = [&](std::vector<int128>& hi, std::vector<int128>& lo, std::int64_t len) {
            for (std::int64_t i = 1; i < len; ++i) {
                hi.push_back(hi.back() + 1 + small(rng));
                int128 drop = small(rng);
                int128 floor_value = lo.back() + 1;
                lo.push_back(std::max(floor_value, hi.back() - drop));
            }
        };
        grow(hi1, lo1, a);
        grow(hi2, lo2, b);

        // every common completion, explored in lockstep
        auto rec = [&](auto&& self, std::vector<int128>& u1, std::vector<int128>& u2,
                       std::vector<int128>& v1, std::vector<int128>& v2, std::int64_t r1,
                       std::int64_t r2) -> void {
            auto split = [](const std::vector<int128>& x) {
                std::int64_t total = static_cast<std::int64_t>(x.size()) - 1;
                int128 best = x[0] + x[static_cast<std::size_t>(total)];
                for (std::int64_t j = 1; j <= total / 2; ++j) {
                    best = std::min(best,
                                    x[static_cast<std::size_t>(j)] + x[static_cast<std::size_t>(total - j)]);
                }
                return best;
            };
            int128 ku = 1 + split(u1) + split(u2);
            int128 kv = 1 + split(v1) + split(v2);
            REQUIRE(ku >= kv);
            if (r1 == 0 && r2 == 0) return;
            if (r1 > 0) {
                u1.push_back(ku);
                v1.push_back(kv);
                self(self, u1, u2, v1, v2, r1 - 1, r2);
                u1.pop_back();
                v1.pop_back();
            }
            if (r2 > 0) {
                u2.push_back(ku);
                v2.push_back(kv);
                self(self, u1, u2, v1, v2, r1, r2 - 1);
                u2.pop_back();
                v2.pop_back();
            }
        };
        rec(rec, hi1, hi2, lo1, lo2, rem1, rem2);
    }
}

TEST_CASE("m* from k*") {
    CHECK(solver::mstar_of_kstar(4) == GrowthRate(3, 4));
    CHECK(solver::mstar_of_kstar(1) == GrowthRate(0, 1));
    CHECK(solver::mstar_of_kstar(791) == GrowthRate(790, 791));
    CHECK_THROWS_AS(solver::mstar_of_kstar(0), validation_error);
}

TEST_CASE("the embedded table is well-formed") {
    CHECK(solver::kstar_symmetric_table[2] == 4);
    CHECK(solver::kstar_symmetric_table[27] == 729);
    CHECK(solver::kstar_symmetric_table[28] == 791);
    CHECK(solver::kstar_symmetric_table[30] == 902);
    CHECK(solver::kstar_symmetric_table[45] == 2057);
    auto rows = solver::verify_table(6);
    REQUIRE(rows.size() == 5);
    for (const auto& row : rows) {
        CHECK(row.ok);
        CHECK(row.computed == row.ell * row.ell);
    }
    CHECK_THROWS_AS(solver::verify_table(46), validation_error);
}

TEST_CASE("search reports serialize with decimal-string values") {
    auto report = solver::kstar_branch_and_bound(3, 3);
    auto j = solver::report_to_json(report);
    CHECK(j["kstar"] == "9");
    CHECK(j["l1"] == 3);
    CHECK(j["witnesses"].is_array());
    CHECK(j["nodes"]["expanded"].get<std::uint64_t>() > 0);
}
