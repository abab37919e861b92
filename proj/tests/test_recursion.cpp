#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "pathram/asymptotics.hpp"
#include "pathram/recursion.hpp"
#include "pathram/walks.hpp"

using namespace pathram;
using walks::StrategyWalk;

namespace {

std::vector<int128> to128(const std::vector<std::int64_t>& v) {
    return std::vector<int128>(v.begin(), v.end());
}

StrategyWalk random_walk(std::mt19937& rng, int colors, std::int64_t length) {
    std::vector<int> entries(static_cast<std::size_t>(length));
    std::uniform_int_distribution<int> pick(1, colors);
    for (auto& e : entries) e = pick(rng);
    return StrategyWalk::make(colors, entries);
}

}  // namespace

TEST_CASE("the figure walk reproduces the published value sequence") {
    auto fig = StrategyWalk::make(2, {1, 1, 2, 2, 1, 1, 1, 2});
    auto trace = recursion::evaluate(fig);
    // k_0..k_7 as published; k_8 = 21 frozen from the reference evaluation
    CHECK(trace.k_values == to128({1, 2, 3, 6, 9, 10, 11, 18, 21}));
    CHECK(trace.x[0] == to128({0, 1, 2, 9, 10, 11}));
    CHECK(trace.x[1] == to128({0, 3, 6, 18}));

    auto ref = oracles::ref_evaluate(2, {1, 1, 2, 2, 1, 1, 1, 2});
    CHECK(trace.k_values == ref.k);
}

TEST_CASE("empty walk evaluates to k_0 = 1") {
    auto trace = recursion::evaluate(StrategyWalk::make(2, {}));
    CHECK(trace.k_values == to128({1}));
    CHECK(trace.k_final() == 1);
}

TEST_CASE("greedy walk of W(5,3) reaches 15 through the expected x sequences") {
    auto trace = recursion::evaluate(walks::greedy_walk({5, 3}));
    CHECK(trace.x[1] == to128({0, 1, 2}));
    CHECK(trace.x[0] == to128({0, 3, 6, 9, 12}));
    CHECK(trace.k_final() == 15);
}

TEST_CASE("the optimal symmetric-28 walks evaluate to 791") {
    auto a = walks::parse_walk("1^6,2^2,1^7,2,1^14,2^24");
    auto a_prime = walks::parse_walk("1,1,2,1,2,2,1^24,2^24");
    CHECK(recursion::k_of_walk(a) == 791);
    CHECK(recursion::k_of_walk(a_prime) == 791);
    CHECK(recursion::k_of_walk(walks::swap_colors(a)) == 791);
    CHECK(recursion::k_of_walk(walks::swap_colors(a_prime)) == 791);
}

TEST_CASE("greedy walks evaluate to the product of their targets") {
    CHECK(recursion::k_of_walk(walks::greedy_walk({10, 10})) == 100);
    CHECK(recursion::k_of_walk(walks::greedy_walk({28, 28})) == 784);
    CHECK(recursion::k_of_walk(walks::greedy_walk({5, 3})) == 15);
    CHECK(recursion::k_of_walk(walks::greedy_walk({7, 5, 3})) == 105);
    CHECK(recursion::k_of_walk(walks::greedy_walk({12, 9, 4})) == 432);
    CHECK(recursion::k_of_walk(walks::greedy_walk({31, 17})) == 527);
    CHECK(recursion::k_of_walk(walks::greedy_walk({97, 89})) == 8633);
    CHECK(recursion::k_of_walk(walks::greedy_walk({10, 10, 10})) == 1000);
    CHECK(recursion::k_of_walk(walks::greedy_walk({100, 100})) == 10000);
    CHECK(recursion::k_of_walk(walks::greedy_walk({33, 30, 31})) == 30690);
    CHECK(recursion::k_of_walk(walks::greedy_walk({1000, 999})) == 999000);
}

TEST_CASE("beta and delta of two-color walks") {
    CHECK(recursion::beta_of_walk(StrategyWalk::make(2, {2})) == 2);
    CHECK(recursion::delta_of_walk(StrategyWalk::make(2, {2})) == GrowthRate(2, 1));

    CHECK(recursion::beta_of_walk(walks::greedy_walk({2, 3})) == 3);
    CHECK(recursion::delta_of_walk(StrategyWalk::make(2, {})) == GrowthRate(1, 1));

    auto family = walks::parse_walk("1^9,2,1^3,2^2");
    CHECK(recursion::beta_of_walk(family) == 34);
    CHECK(recursion::delta_of_walk(family) == GrowthRate(43, 10));

    CHECK_THROWS_AS(recursion::beta_of_walk(StrategyWalk::make(3, {1, 2, 3})), validation_error);
    CHECK_THROWS_AS(recursion::delta_of_walk(StrategyWalk::make(1, {1})), validation_error);
}

TEST_CASE("strict monotonicity, exhaustively for small walks") {
    // Every two-color walk with d <= 20, checked along an incremental
    // depth-first enumeration of the recursion itself.
    std::vector<int128> x1{0}, x2{0};
    auto min_split = [](const std::vector<int128>& x) {
        std::int64_t total = static_cast<std::int64_t>(x.size()) - 1;
        int128 best = x[0] + x[static_cast<std::size_t>(total)];
        for (std::int64_t j = 1; j <= total / 2; ++j) {
            best = std::min(best, x[static_cast<std::size_t>(j)] + x[static_cast<std::size_t>(total - j)]);
        }
        return best;
    };
    std::int64_t violations = 0;
    auto rec = [&](auto&& self, int128 prev_k, std::int64_t depth) -> void {
        int128 k = 1 + min_split(x1) + min_split(x2);
        if (k <= prev_k) ++violations;
        if (depth == 20) return;
        x1.push_back(k);
        self(self, k, depth + 1);
        x1.pop_back();
        x2.push_back(k);
        self(self, k, depth + 1);
        x2.pop_back();
    };
    rec(rec, 0, 0);
    CHECK(violations == 0);
}

TEST_CASE("strict monotonicity on random larger walks, and trace consistency") {
    std::mt19937 rng(20260808);
    for (int trial = 0; trial < 1000; ++trial) {
        int colors = 2 + trial % 3;
        std::int64_t length = 5 + static_cast<std::int64_t>(rng() % 120);
        auto w = random_walk(rng, colors, length);
        auto trace = recursion::evaluate(w);
        for (std::size_t i = 1; i < trace.k_values.size(); ++i) {
            REQUIRE(trace.k_values[i] > trace.k_values[i - 1]);
        }
        for (const auto& xs : trace.x) {
            for (std::size_t j = 1; j < xs.size(); ++j) {
                REQUIRE(xs[j] > xs[j - 1]);
            }
        }
        // x_{s, nu_{i,s}} equals k_i at the step that appended it
        std::vector<std::int64_t> pos(static_cast<std::size_t>(colors), 1);
        for (std::int64_t i = 0; i < w.length(); ++i) {
            int s = w.entries()[static_cast<std::size_t>(i)] - 1;
            REQUIRE(trace.x[static_cast<std::size_t>(s)][static_cast<std::size_t>(pos[static_cast<std::size_t>(s)])] ==
                    trace.k_values[static_cast<std::size_t>(i)]);
            ++pos[static_cast<std::size_t>(s)];
        }
    }
}

TEST_CASE("evaluation agrees with the reference implementation on random walks") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        int colors = 2 + trial % 2;
        auto w = random_walk(rng, colors, 1 + static_cast<std::int64_t>(rng() % 40));
        std::vector<int> entries(w.entries().begin(), w.entries().end());
        auto ref = oracles::ref_evaluate(colors, entries);
        auto trace = recursion::evaluate(w);
        REQUIRE(trace.k_values == ref.k);
        REQUIRE(trace.x == ref.x);
    }
}

TEST_CASE("color swap preserves the walk value, exhaustively for d <= 16") {
    for (std::int64_t l1 = 1; l1 <= 9; ++l1) {
        for (std::int64_t l2 = 1; l1 + l2 <= 18 && l2 <= 9; ++l2) {
            walks::enumerate_walks({l1, l2}, [&](const StrategyWalk& w) {
                REQUIRE(recursion::k_of_walk(w) == recursion::k_of_walk(walks::swap_colors(w)));
                return true;
            });
        }
    }
}

TEST_CASE("every small asymmetric walk respects the growth ceiling") {
    // k(alpha) <= c^(log2 3) * l for every walk in W(l,c) with l + c <= 16
    for (std::int64_t ell = 1; ell <= 15; ++ell) {
        for (std::int64_t c = 1; ell + c <= 16; ++c) {
            walks::enumerate_walks({ell, c}, [&](const StrategyWalk& w) {
                REQUIRE(asymptotics::leq_growth_ceiling(recursion::k_of_walk(w), c, ell));
                return true;
            });
        }
    }
}

TEST_CASE("trace export uses decimal strings and run-length walks") {
    auto trace = recursion::evaluate(walks::greedy_walk({5, 3}));
    auto j = recursion::trace_to_json(trace);
    CHECK(j["walk"] == "2^2,1^4");
    CHECK(j["k"].back() == "15");
    CHECK(j["x1"] == nlohmann::json({"0", "3", "6", "9", "12"}));
    CHECK(j["x2"] == nlohmann::json({"0", "1", "2"}));
}

TEST_CASE("min_split_sum validates its range") {
    std::vector<int128> seq{0, 1, 3};
    CHECK(recursion::min_split_sum(seq, 2) == 2);  // pair (1,1) beats (0,2)
    CHECK(recursion::min_split_sum(seq, 1) == 1);
    CHECK_THROWS_AS(recursion::min_split_sum(seq, 3), validation_error);
    CHECK_THROWS_AS(recursion::min_split_sum(seq, -1), validation_error);
}
