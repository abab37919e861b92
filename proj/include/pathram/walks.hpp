#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pathram/common.hpp"

namespace pathram::walks {

/// A finite strategy sequence over colors {1..r}, equivalently a monotone
/// axis-parallel lattice walk from (1,...,1) to its targets (l_1,...,l_r),
/// where l_s = 1 + (number of entries equal to s). Immutable once built.
class StrategyWalk {
  public:
    StrategyWalk() = default;  // empty walk with r = 1

    static StrategyWalk make(int colors, const std::vector<int>& entries);
    static StrategyWalk from_raw(int colors, std::vector<std::uint8_t> entries);

    int colors() const { return colors_; }
    const std::vector<std::uint8_t>& entries() const { return entries_; }
    const std::vector<std::int64_t>& targets() const { return targets_; }
    std::int64_t length() const { return static_cast<std::int64_t>(entries_.size()); }

    bool operator==(const StrategyWalk& o) const {
        return colors_ == o.colors_ && entries_ == o.entries_;
    }
    bool operator!=(const StrategyWalk& o) const { return !(*this == o); }
    bool operator<(const StrategyWalk& o) const { return entries_ < o.entries_; }

  private:
    int colors_ = 1;
    std::vector<std::uint8_t> entries_;
    std::vector<std::int64_t> targets_ = {1};
};

struct WalkPosition {
    std::int64_t step = 0;               // 0 <= step <= d
    std::vector<std::int64_t> coords;    // nu_step, one coordinate per color
};

/// All walk positions nu_0..nu_d; nu_0 = (1,...,1), nu_d = targets.
std::vector<WalkPosition> positions(const StrategyWalk& walk);

/// Number of walks ending at the given targets (multinomial coefficient).
int128 walk_count(const std::vector<std::int64_t>& targets);

/// Yields every walk ending at the given targets exactly once, in
/// lexicographic order of entries. The reference passed to the callback is
/// only valid during the call; return false to stop early.
void enumerate_walks(const std::vector<std::int64_t>& targets,
                     const std::function<bool(const StrategyWalk&)>& yield);

/// The staircase-free walk (r)^{l_r-1} o (r-1)^{l_{r-1}-1} o ... o (1)^{l_1-1}
/// corresponding to the greedy Painter strategy.
StrategyWalk greedy_walk(const std::vector<std::int64_t>& targets);

/// Interchanges the 1 and 2 entries; only defined for two colors.
StrategyWalk swap_colors(const StrategyWalk& walk);

struct ColorChoice {
    std::int64_t index = 0;  // 0 <= index <= d-1
    int color = 0;           // entries()[index]
};

/// The unique first step of the walk that leaves the box
/// [1,lambda_1] x ... x [1,lambda_r]. Returns nullopt when lambda equals the
/// targets (the walk never leaves the box and the game is over).
std::optional<ColorChoice> choose_color(const StrategyWalk& walk,
                                        const std::vector<std::int64_t>& lambda);

/// Run-length walk text, e.g. "1^6,2^2,1^7,2,1^14,2^24". Whitespace ignored;
/// colors are 1-based decimal integers. min_colors widens r beyond the
/// largest color mentioned (colors with no entries have target 1).
StrategyWalk parse_walk(std::string_view text, int min_colors = 0);
std::string to_run_length(const StrategyWalk& walk);

}  // namespace pathram::walks
