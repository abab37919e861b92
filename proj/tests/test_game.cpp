#include "doctest.h"

#include "pathram/game.hpp"
#include "pathram/recursion.hpp"
#include "pathram/walks.hpp"

using namespace pathram;
using walks::StrategyWalk;

TEST_CASE("board construction keeps the forest structure honest") {
    game::GameBoard board(2);
    int a = board.add_vertex(1, {});
    int b = board.add_vertex(2, {a});
    int c = board.add_vertex(1, {});
    CHECK(board.component_size(a) == 2);
    CHECK(board.component_size(c) == 1);
    CHECK(board.component_of(a) == board.component_of(b));
    CHECK(board.check_forest());

    // joining the same component twice would close a cycle
    CHECK_THROWS_AS(board.add_vertex(1, {a, b}), validation_error);

    int d = board.add_vertex(1, {b, c});
    CHECK(board.component_size(d) == 4);
    CHECK(board.largest_component() == 4);
    CHECK(board.check_forest());

    // longest monochromatic paths: a(1)-b(2)-d(1)-c(1)
    CHECK(board.longest_mono_path(a, 1) == 2);  // d-c
    CHECK(board.longest_mono_path(a, 2) == 1);
    CHECK(board.longest_path_from(c, 1) == 2);
    CHECK(board.longest_path_from(b, 1) == 0);
}

TEST_CASE("painter view over an attachment set") {
    game::GameBoard board(2);
    auto empty_view = game::longest_completed_paths(board, {});
    CHECK(empty_view.completed == std::vector<std::int64_t>{1, 1});

    int v = board.add_vertex(1, {});
    auto one = game::longest_completed_paths(board, {v});
    CHECK(one.completed == std::vector<std::int64_t>{2, 1});

    // color-1 single vertex and a color-2 path end inside a 2-vertex tree
    int w1 = board.add_vertex(2, {});
    int w2 = board.add_vertex(2, {w1});
    auto both = game::longest_completed_paths(board, {v, w2});
    CHECK(both.completed == std::vector<std::int64_t>{2, 3});

    CHECK_THROWS_AS(game::longest_completed_paths(board, {w1, w2}), validation_error);

    CHECK(both.clamped({2, 2}) == std::vector<std::int64_t>{2, 2});
}

TEST_CASE("painter decisions for walk and greedy strategies") {
    auto w = StrategyWalk::make(2, {1, 2});
    game::PainterView view;
    view.completed = {1, 1};
    auto strategy = game::PainterStrategy::from_walk(w);
    CHECK(game::painter_decide(strategy, view, {2, 2}) == 1);
    view.completed = {2, 1};
    CHECK(game::painter_decide(strategy, view, {2, 2}) == 2);
    view.completed = {2, 2};
    CHECK_FALSE(game::painter_decide(strategy, view, {2, 2}).has_value());

    view.completed = {3, 3};
    CHECK(game::painter_decide(game::PainterStrategy::greedy(), view, {5, 3}) == 1);
    view.completed = {2, 2};
    CHECK(game::painter_decide(game::PainterStrategy::greedy(), view, {5, 3}) == 2);
}

TEST_CASE("the smallest full game") {
    auto strategy = game::PainterStrategy::from_walk(StrategyWalk::make(2, {1, 2}));
    auto result = game::run_game({2, 2}, strategy);
    CHECK(result.steps == 3);
    CHECK(result.tree_sizes == std::vector<int128>{1, 2, 4});
    CHECK(result.largest_component == 4);
    CHECK(result.losing_color != 0);
    CHECK(result.extracted == std::vector<int>{1, 2});

    auto capped = game::run_game({2, 2}, strategy, int128(3));
    CHECK(capped.cap_respected);
    CHECK(capped.losing_color == 0);
    CHECK(capped.largest_component < 4);

    auto trivial = game::run_game({1, 1}, game::PainterStrategy::greedy());
    CHECK(trivial.steps == 1);
    CHECK(trivial.largest_component == 1);
    CHECK(trivial.losing_color != 0);
}

TEST_CASE("board games replay the recursion for every small walk") {
    for (std::int64_t l1 = 1; l1 <= 6; ++l1) {
        for (std::int64_t l2 = 1; l1 + l2 <= 10; ++l2) {
            walks::enumerate_walks({l1, l2}, [&](const StrategyWalk& w) {
                auto trace = recursion::evaluate(w);
                auto result =
                    game::run_game(w.targets(), game::PainterStrategy::from_walk(w));
                REQUIRE(result.tree_sizes == trace.k_values);
                REQUIRE(result.largest_component == trace.k_final());
                // extracted decisions equal the walk
                std::vector<int> expected(w.entries().begin(), w.entries().end());
                REQUIRE(result.extracted == expected);

                // with the cap one below k(alpha), Painter survives
                auto capped = game::run_game(w.targets(), game::PainterStrategy::from_walk(w),
                                             trace.k_final() - 1);
                REQUIRE(capped.cap_respected);
                REQUIRE(capped.losing_color == 0);
                return true;
            });
        }
    }
}

TEST_CASE("greedy painter achieves the product of the targets") {
    for (std::int64_t l1 = 1; l1 <= 8; ++l1) {
        for (std::int64_t l2 = 1; l2 <= 8; ++l2) {
            auto result = game::run_game({l1, l2}, game::PainterStrategy::greedy());
            REQUIRE(result.largest_component == l1 * l2);
        }
    }
    auto three = game::run_game({3, 2, 2}, game::PainterStrategy::greedy());
    CHECK(three.largest_component == 12);
    auto single = game::run_game({5}, game::PainterStrategy::greedy());
    CHECK(single.largest_component == 5);
}

TEST_CASE("transcripts replay into an identical forest") {
    auto w = walks::greedy_walk({4, 3});
    auto result = game::run_game(w.targets(), game::PainterStrategy::from_walk(w), std::nullopt,
                                 true);
    game::GameBoard replay(2);
    for (const auto& entry : result.transcript) {
        std::vector<int> edges = entry["edges"].get<std::vector<int>>();
        int v = replay.add_vertex(entry["color"].get<int>(), edges);
        CHECK(v == entry["new_vertex"].get<int>());
    }
    CHECK(replay.check_forest());
    CHECK(static_cast<int128>(replay.largest_component()) == result.largest_component);
}

TEST_CASE("the component invariant holds on real traces and fails on corrupted ones") {
    auto check_walk = [](const StrategyWalk& w) {
        auto x = recursion::evaluate(w).x;
        auto verdict = game::check_strategy_invariant(w, x);
        REQUIRE(verdict.ok);

        // a +1 perturbation of any single interior entry is rejected
        for (std::size_t s = 0; s < x.size(); ++s) {
            for (std::size_t t = 1; t < x[s].size(); ++t) {
                auto mutated = x;
                mutated[s][t] += 1;
                auto bad = game::check_strategy_invariant(w, mutated);
                REQUIRE_FALSE(bad.ok);
                REQUIRE_FALSE(bad.message.empty());
            }
        }
    };
    check_walk(StrategyWalk::make(2, {1, 2}));
    check_walk(walks::greedy_walk({4, 3}));
    check_walk(StrategyWalk::make(2, {1, 1, 2, 2, 1, 2}));
}

TEST_CASE("strategy walks must match the game targets") {
    auto strategy = game::PainterStrategy::from_walk(StrategyWalk::make(2, {1, 2}));
    CHECK_THROWS_AS(game::run_game({3, 3}, strategy), validation_error);
    CHECK_THROWS_AS(game::run_game({}, game::PainterStrategy::greedy()), validation_error);
    CHECK_THROWS_AS(game::run_game({0, 2}, game::PainterStrategy::greedy()), validation_error);
}
