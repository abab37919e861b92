#include "pathram/game.hpp"

#include <algorithm>

namespace pathram::game {

GameBoard::GameBoard(int colors) : colors_(colors) {
    if (colors < 1) throw validation_error("a board needs at least one color");
}

int GameBoard::find_root(int v) const {
    while (dsu_parent_[static_cast<std::size_t>(v)] != v) {
        dsu_parent_[static_cast<std::size_t>(v)] =
            dsu_parent_[static_cast<std::size_t>(dsu_parent_[static_cast<std::size_t>(v)])];
        v = dsu_parent_[static_cast<std::size_t>(v)];
    }
    return v;
}

int GameBoard::add_vertex(int color, const std::vector<int>& neighbors) {
    if (color < 1 || color > colors_) {
        throw validation_error("vertex color " + std::to_string(color) + " outside {1.." +
                               std::to_string(colors_) + "}");
    }
    std::vector<int> roots;
    roots.reserve(neighbors.size());
    for (int u : neighbors) {
        if (u < 0 || u >= vertex_count()) throw validation_error("unknown neighbor vertex");
        int root = find_root(u);
        if (std::find(roots.begin(), roots.end(), root) != roots.end()) {
            throw validation_error("attachment would close a cycle: two neighbors share a component");
        }
        roots.push_back(root);
    }

    int v = static_cast<int>(color_.size());
    color_.push_back(color);
    adj_.emplace_back(neighbors);
    dsu_parent_.push_back(v);
    dsu_size_.push_back(1);
    for (int u : neighbors) adj_[static_cast<std::size_t>(u)].push_back(v);
    for (int root : roots) {
        dsu_parent_[static_cast<std::size_t>(root)] = v;
        dsu_size_[static_cast<std::size_t>(v)] += dsu_size_[static_cast<std::size_t>(root)];
    }
    largest_component_ = std::max(largest_component_, dsu_size_[static_cast<std::size_t>(v)]);
    return v;
}

int GameBoard::component_of(int v) const {
    if (v < 0 || v >= vertex_count()) throw validation_error("unknown vertex");
    return find_root(v);
}

std::int64_t GameBoard::component_size(int v) const {
    return dsu_size_[static_cast<std::size_t>(component_of(v))];
}

std::vector<int> GameBoard::component_vertices(int v) const {
    // DFS over adjacency; boards stay small enough for per-query traversal.
    std::vector<int> out;
    std::vector<int> stack{v};
    std::vector<char> seen(color_.size(), 0);
    seen[static_cast<std::size_t>(v)] = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        out.push_back(u);
        for (int w : adj_[static_cast<std::size_t>(u)]) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                stack.push_back(w);
            }
        }
    }
    return out;
}

namespace {

// Depth (in vertices) of the longest path from v through vertices of `color`,
// not stepping back onto `parent`.
std::int64_t color_depth(const GameBoard& board, int v, int parent, int color) {
    if (board.color_of(v) != color) return 0;
    std::int64_t best = 0;
    for (int w : board.neighbors_of(v)) {
        if (w == parent) continue;
        best = std::max(best, color_depth(board, w, v, color));
    }
    return 1 + best;
}

}  // namespace

std::int64_t GameBoard::longest_path_from(int v, int color) const {
    return color_depth(*this, v, -1, color);
}

std::int64_t GameBoard::longest_mono_path(int v, int color) const {
    std::int64_t best = 0;
    for (int u : component_vertices(v)) {
        if (color_of(u) != color) continue;
        std::int64_t top1 = 0, top2 = 0;
        for (int w : neighbors_of(u)) {
            std::int64_t d = color_depth(*this, w, u, color);
            if (d > top1) {
                top2 = top1;
                top1 = d;
            } else if (d > top2) {
                top2 = d;
            }
        }
        best = std::max(best, 1 + top1 + top2);
    }
    return best;
}

bool GameBoard::check_forest() const {
    // Edge count per component must be size-1; adjacency must be symmetric.
    std::int64_t n = vertex_count();
    std::vector<std::int64_t> edges_by_root(static_cast<std::size_t>(n), 0);
    std::vector<std::int64_t> count_by_root(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
        int root = find_root(v);
        ++count_by_root[static_cast<std::size_t>(root)];
        for (int w : adj_[static_cast<std::size_t>(v)]) {
            const auto& back = adj_[static_cast<std::size_t>(w)];
            if (std::find(back.begin(), back.end(), v) == back.end()) return false;
            if (find_root(w) != root) return false;
            if (w > v) ++edges_by_root[static_cast<std::size_t>(root)];
        }
    }
    for (int v = 0; v < n; ++v) {
        if (find_root(v) != v) continue;
        if (count_by_root[static_cast<std::size_t>(v)] != dsu_size_[static_cast<std::size_t>(v)]) {
            return false;
        }
        if (edges_by_root[static_cast<std::size_t>(v)] !=
            count_by_root[static_cast<std::size_t>(v)] - 1) {
            return false;
        }
    }
    return true;
}

std::vector<std::int64_t> PainterView::clamped(const std::vector<std::int64_t>& targets) const {
    if (targets.size() != completed.size()) {
        throw validation_error("view and targets disagree on the number of colors");
    }
    std::vector<std::int64_t> out(completed.size());
    for (std::size_t s = 0; s < completed.size(); ++s) {
        out[s] = std::min(completed[s], targets[s]);
    }
    return out;
}

namespace {

PainterView view_from_anchors(const GameBoard& board, const std::vector<int>& anchors) {
    PainterView view;
    view.completed.assign(static_cast<std::size_t>(board.colors()), 1);
    for (int s = 1; s <= board.colors(); ++s) {
        std::int64_t top1 = 0, top2 = 0;
        for (int u : anchors) {
            std::int64_t d = board.longest_path_from(u, s);
            if (d > top1) {
                top2 = top1;
                top1 = d;
            } else if (d > top2) {
                top2 = d;
            }
        }
        view.completed[static_cast<std::size_t>(s - 1)] = 1 + top1 + top2;
    }
    return view;
}

}  // namespace

PainterView longest_completed_paths(const GameBoard& board, const std::vector<int>& attach_to) {
    std::vector<int> roots;
    for (int u : attach_to) {
        int root = board.component_of(u);
        if (std::find(roots.begin(), roots.end(), root) != roots.end()) {
            throw validation_error("attachment set touches a component twice");
        }
        roots.push_back(root);
    }
    return view_from_anchors(board, attach_to);
}

std::optional<int> painter_decide(const PainterStrategy& strategy, const PainterView& view,
                                  const std::vector<std::int64_t>& targets) {
    const int colors = static_cast<int>(targets.size());
    if (static_cast<int>(view.completed.size()) != colors) {
        throw validation_error("view and targets disagree on the number of colors");
    }
    if (strategy.kind == PainterStrategy::Kind::greedy) {
        for (int s = colors; s >= 1; --s) {
            if (view.completed[static_cast<std::size_t>(s - 1)] <
                targets[static_cast<std::size_t>(s - 1)]) {
                return s;
            }
        }
        return std::nullopt;
    }
    if (strategy.walk.targets() != targets) {
        throw validation_error("walk strategy targets do not match the game targets");
    }
    auto choice = walks::choose_color(strategy.walk, view.clamped(targets));
    if (!choice) return std::nullopt;
    return choice->color;
}

namespace {

struct ListEntry {
    int128 size = 0;   // 0 means the null graph
    int end_a = -1;    // endpoints of the recorded monochromatic path
    int end_b = -1;
};

struct StepOutcome {
    bool cap_respected = false;
    bool game_over = false;
    int sigma = 0;
    std::int64_t completed = 0;  // lambda'_sigma
    int128 planned = 0;
};

struct Builder {
    std::vector<std::int64_t> targets;
    GameBoard board;
    std::vector<std::vector<ListEntry>> lists;
    nlohmann::json transcript = nlohmann::json::array();
    bool with_transcript = false;

    Builder(std::vector<std::int64_t> game_targets, bool transcript_on)
        : targets(std::move(game_targets)),
          board(static_cast<int>(targets.size())),
          lists(targets.size()),
          with_transcript(transcript_on) {
        for (auto& list : lists) list.push_back(ListEntry{});
    }

    void log_vertex(int v, int color, const std::vector<int>& edges, const char* kind) {
        if (!with_transcript) return;
        nlohmann::json entry;
        entry["new_vertex"] = v;
        entry["color"] = color;
        entry["edges"] = edges;
        entry["kind"] = kind;
        transcript.push_back(std::move(entry));
    }

    // Fresh copy of the component containing `rep`; returns old -> new.
    std::vector<std::pair<int, int>> copy_component(int rep) {
        std::vector<int> order{rep};
        std::vector<int> parent{-1};
        std::vector<char> seen(static_cast<std::size_t>(board.vertex_count()), 0);
        seen[static_cast<std::size_t>(rep)] = 1;
        for (std::size_t i = 0; i < order.size(); ++i) {
            for (int w : board.neighbors_of(order[i])) {
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    order.push_back(w);
                    parent.push_back(order[i]);
                }
            }
        }
        std::vector<std::pair<int, int>> mapping;
        mapping.reserve(order.size());
        auto mapped = [&](int old) {
            for (const auto& [from, to] : mapping) {
                if (from == old) return to;
            }
            throw internal_error("copied component lost a vertex");
        };
        for (std::size_t i = 0; i < order.size(); ++i) {
            std::vector<int> edges;
            if (parent[i] >= 0) edges.push_back(mapped(parent[i]));
            int v = board.add_vertex(board.color_of(order[i]), edges);
            log_vertex(v, board.color_of(order[i]), edges, "copy");
            mapping.push_back({order[i], v});
        }
        return mapping;
    }

    // One Builder step: pick minimal splits, ask the Painter, materialize the
    // tree, and extend the lists. Does nothing when the cap would be violated.
    StepOutcome advance(const PainterStrategy& painter, const std::optional<int128>& cap) {
        const int colors = board.colors();
        StepOutcome out;

        std::vector<std::pair<std::size_t, std::size_t>> picks(static_cast<std::size_t>(colors));
        out.planned = 1;
        for (int s = 0; s < colors; ++s) {
            const auto& list = lists[static_cast<std::size_t>(s)];
            const std::size_t total = list.size() - 1;
            std::size_t best_j = 0;
            int128 best_sum = list[0].size + list[total].size;
            for (std::size_t j = 1; j <= total; ++j) {
                int128 sum = list[j].size + list[total - j].size;
                if (sum < best_sum) {
                    best_sum = sum;
                    best_j = j;
                }
            }
            picks[static_cast<std::size_t>(s)] = {best_j, total - best_j};
            out.planned += best_sum;
        }
        if (cap && out.planned > *cap) {
            out.cap_respected = true;
            return out;
        }

        // The recorded path endpoints stand in for the copies when measuring
        // what each color would complete (copies are isomorphic).
        std::vector<int> anchors;
        for (int s = 0; s < colors; ++s) {
            const auto& list = lists[static_cast<std::size_t>(s)];
            for (std::size_t j : {picks[static_cast<std::size_t>(s)].first,
                                  picks[static_cast<std::size_t>(s)].second}) {
                if (list[j].size > 0) anchors.push_back(list[j].end_a);
            }
        }
        PainterView view = view_from_anchors(board, anchors);
        auto decision = painter_decide(painter, view, targets);
        out.sigma = decision.value_or(1);
        out.completed = view.completed[static_cast<std::size_t>(out.sigma - 1)];

        std::vector<int> neighbors;
        std::vector<std::vector<std::pair<int, int>>> maps(static_cast<std::size_t>(colors) * 2);
        for (int s = 0; s < colors; ++s) {
            const auto& list = lists[static_cast<std::size_t>(s)];
            const std::size_t js[2] = {picks[static_cast<std::size_t>(s)].first,
                                       picks[static_cast<std::size_t>(s)].second};
            for (int half = 0; half < 2; ++half) {
                const ListEntry& entry = list[js[half]];
                if (entry.size == 0) continue;
                auto mapping = copy_component(entry.end_a);
                for (const auto& [from, to] : mapping) {
                    if (from == entry.end_a) neighbors.push_back(to);
                }
                maps[static_cast<std::size_t>(2 * s + half)] = std::move(mapping);
            }
        }
        int v = board.add_vertex(out.sigma, neighbors);
        log_vertex(v, out.sigma, neighbors, "decision");
        if (with_transcript) {
            transcript.back()["component_size"] = dec_string(board.component_size(v));
        }
        if (static_cast<int128>(board.component_size(v)) != out.planned) {
            throw internal_error("constructed tree size disagrees with the planned split");
        }

        out.game_over = !decision || out.completed >= targets[static_cast<std::size_t>(out.sigma - 1)];
        if (!out.game_over) {
            auto mapped_end = [&](const std::vector<std::pair<int, int>>& mapping, int old) {
                for (const auto& [from, to] : mapping) {
                    if (from == old) return to;
                }
                throw internal_error("copied component lost a path endpoint");
            };
            const std::size_t j1 = picks[static_cast<std::size_t>(out.sigma - 1)].first;
            const std::size_t j2 = picks[static_cast<std::size_t>(out.sigma - 1)].second;
            const auto& list = lists[static_cast<std::size_t>(out.sigma - 1)];
            ListEntry fresh;
            fresh.size = out.planned;
            fresh.end_a =
                list[j1].size > 0
                    ? mapped_end(maps[static_cast<std::size_t>(2 * (out.sigma - 1))], list[j1].end_b)
                    : v;
            fresh.end_b = list[j2].size > 0
                              ? mapped_end(maps[static_cast<std::size_t>(2 * (out.sigma - 1) + 1)],
                                           list[j2].end_b)
                              : v;
            lists[static_cast<std::size_t>(out.sigma - 1)].push_back(fresh);
        }
        return out;
    }
};

std::int64_t step_budget(const std::vector<std::int64_t>& targets) {
    std::int64_t budget = 1;
    for (std::int64_t t : targets) budget += t - 1;
    return budget;
}

void validate_game_targets(const std::vector<std::int64_t>& targets) {
    if (targets.empty()) throw validation_error("the game needs at least one color");
    for (std::int64_t t : targets) {
        if (t < 1) throw validation_error("path targets must be >= 1");
    }
}

}  // namespace

GameResult run_game(const std::vector<std::int64_t>& targets, const PainterStrategy& painter,
                    std::optional<int128> cap, bool with_transcript) {
    validate_game_targets(targets);
    Builder builder(targets, with_transcript);
    GameResult result;
    const std::int64_t budget = step_budget(targets);

    for (std::int64_t step = 0;; ++step) {
        if (step > budget) throw internal_error("Builder exceeded the guaranteed number of steps");
        StepOutcome out = builder.advance(painter, cap);
        if (out.cap_respected) {
            result.cap_respected = true;
            break;
        }
        result.tree_sizes.push_back(out.planned);
        ++result.steps;
        if (out.game_over) {
            result.losing_color = out.sigma;
            result.losing_path_len = out.completed;
            break;
        }
        result.extracted.push_back(out.sigma);
    }
    result.largest_component = builder.board.largest_component();
    if (with_transcript) result.transcript = std::move(builder.transcript);
    return result;
}

InvariantVerdict check_strategy_invariant(const walks::StrategyWalk& walk,
                                          const std::vector<std::vector<int128>>& x_required) {
    const auto& targets = walk.targets();
    const int colors = walk.colors();
    validate_game_targets(targets);
    if (static_cast<int>(x_required.size()) != colors) {
        throw validation_error("x table and walk disagree on the number of colors");
    }
    for (int s = 0; s < colors; ++s) {
        if (static_cast<std::int64_t>(x_required[static_cast<std::size_t>(s)].size()) !=
            targets[static_cast<std::size_t>(s)]) {
            throw validation_error("x table row " + std::to_string(s + 1) + " has the wrong length");
        }
    }

    Builder builder(targets, false);
    PainterStrategy painter = PainterStrategy::from_walk(walk);
    InvariantVerdict verdict;
    const std::int64_t budget = step_budget(targets);

    for (std::int64_t step = 0;; ++step) {
        if (step > budget) throw internal_error("Builder exceeded the guaranteed number of steps");
        StepOutcome out = builder.advance(painter, std::nullopt);
        if (out.game_over) break;

        // Every monochromatic P_t in color s must sit in a component with at
        // least x_required[s][t] vertices (checked on non-final steps only).
        const GameBoard& board = builder.board;
        std::vector<char> seen(static_cast<std::size_t>(board.vertex_count()), 0);
        for (int u = 0; u < board.vertex_count(); ++u) {
            int root = board.component_of(u);
            if (seen[static_cast<std::size_t>(root)]) continue;
            seen[static_cast<std::size_t>(root)] = 1;
            const std::int64_t comp_size = board.component_size(u);
            for (int s = 1; s <= colors; ++s) {
                std::int64_t longest = board.longest_mono_path(u, s);
                std::int64_t tmax =
                    std::min<std::int64_t>(longest, targets[static_cast<std::size_t>(s - 1)] - 1);
                for (std::int64_t t = 1; t <= tmax; ++t) {
                    int128 required =
                        x_required[static_cast<std::size_t>(s - 1)][static_cast<std::size_t>(t)];
                    if (static_cast<int128>(comp_size) < required) {
                        verdict.ok = false;
                        verdict.step = step;
                        verdict.color = s;
                        verdict.path_len = t;
                        verdict.component_size = comp_size;
                        verdict.required = required;
                        verdict.message = "component of " + std::to_string(comp_size) +
                                          " vertices holds a P_" + std::to_string(t) + " in color " +
                                          std::to_string(s) + " but " + dec_string(required) +
                                          " vertices are required";
                        return verdict;
                    }
                }
            }
        }
    }
    return verdict;
}

}  // namespace pathram::game
