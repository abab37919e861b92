#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pathram/common.hpp"
#include "pathram/walks.hpp"

#include "json.hpp"

namespace pathram::game {

/// The evolving vertex-colored forest. Vertices are appended one at a time;
/// each addition names its neighbors, which must lie in pairwise distinct
/// components (the board never acquires a cycle).
class GameBoard {
  public:
    explicit GameBoard(int colors);

    int colors() const { return colors_; }
    std::int64_t vertex_count() const { return static_cast<std::int64_t>(color_.size()); }

    /// Adds a vertex with the given color (1..r) attached to `neighbors`.
    /// Throws when two neighbors share a component.
    int add_vertex(int color, const std::vector<int>& neighbors);

    int color_of(int v) const { return color_[static_cast<std::size_t>(v)]; }
    const std::vector<int>& neighbors_of(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int component_of(int v) const;
    std::int64_t component_size(int v) const;
    std::int64_t largest_component() const { return largest_component_; }

    /// Vertices of the component containing v.
    std::vector<int> component_vertices(int v) const;

    /// Longest path of `color`-colored vertices starting at v and staying in
    /// v's component; 0 when v has a different color.
    std::int64_t longest_path_from(int v, int color) const;

    /// Longest monochromatic path of `color` anywhere in v's component.
    std::int64_t longest_mono_path(int v, int color) const;

    /// Structural self-check: parent/size bookkeeping matches the adjacency
    /// lists and the board is acyclic.
    bool check_forest() const;

  private:
    int find_root(int v) const;

    int colors_;
    std::vector<int> color_;
    std::vector<std::vector<int>> adj_;
    mutable std::vector<int> dsu_parent_;
    std::vector<std::int64_t> dsu_size_;
    std::int64_t largest_component_ = 0;
};

/// For each color s, the number of vertices of the longest monochromatic path
/// in color s that coloring a new vertex s would complete, given the vertices
/// it attaches to.
struct PainterView {
    std::vector<std::int64_t> completed;  // lambda'_s, one per color; each >= 1

    std::vector<std::int64_t> clamped(const std::vector<std::int64_t>& targets) const;
};

PainterView longest_completed_paths(const GameBoard& board, const std::vector<int>& attach_to);

/// Painter strategies: the walk strategy decides by the first box exit of its
/// strategy walk; greedy uses the highest color not completing its target.
struct PainterStrategy {
    enum class Kind { walk, greedy };
    Kind kind = Kind::greedy;
    walks::StrategyWalk walk;  // only for Kind::walk

    static PainterStrategy from_walk(walks::StrategyWalk w) {
        PainterStrategy s;
        s.kind = Kind::walk;
        s.walk = std::move(w);
        return s;
    }
    static PainterStrategy greedy() { return PainterStrategy{}; }
};

/// The color the strategy assigns for a view; nullopt when every color
/// completes its target path (any choice loses and ends the game).
std::optional<int> painter_decide(const PainterStrategy& strategy, const PainterView& view,
                                  const std::vector<std::int64_t>& targets);

struct GameResult {
    std::vector<int> extracted;            // Painter's decisions except the last
    std::vector<int128> tree_sizes;        // size of the tree built in each step
    int losing_color = 0;                  // 0 when Painter survived
    std::int64_t losing_path_len = 0;
    int128 largest_component = 0;
    std::int64_t steps = 0;                // decision steps played
    bool cap_respected = false;            // halted because the next tree would exceed the cap
    nlohmann::json transcript;             // replayable vertex-addition log
};

/// Plays Builder's list strategy against the given Painter until a target
/// path appears (or the cap would be violated). Copies of recorded trees are
/// materialized on demand and excluded from the step count.
GameResult run_game(const std::vector<std::int64_t>& targets, const PainterStrategy& painter,
                    std::optional<int128> cap = std::nullopt, bool with_transcript = false);

struct InvariantVerdict {
    bool ok = true;
    std::int64_t step = -1;
    int color = 0;
    std::int64_t path_len = 0;
    int128 component_size = 0;
    int128 required = 0;
    std::string message;
};

/// Replays the game for the walk strategy and checks after every non-final
/// step that each monochromatic P_t in color s sits in a component of at
/// least x_required[s][t] vertices. Returns the first violation, if any.
InvariantVerdict check_strategy_invariant(const walks::StrategyWalk& walk,
                                          const std::vector<std::vector<int128>>& x_required);

}  // namespace pathram::game
