#include "pathram/walks.hpp"

#include <algorithm>

namespace pathram::walks {

namespace {

std::vector<std::int64_t> derive_targets(int colors, const std::vector<std::uint8_t>& entries) {
    std::vector<std::int64_t> targets(static_cast<std::size_t>(colors), 1);
    for (std::size_t i = 0; i < entries.size(); ++i) {
        int c = entries[i];
        if (c < 1 || c > colors) {
            throw validation_error("walk entry " + std::to_string(i) + " is color " + std::to_string(c) +
                                   ", outside {1.." + std::to_string(colors) + "}");
        }
        ++targets[static_cast<std::size_t>(c - 1)];
    }
    return targets;
}

void validate_targets(const std::vector<std::int64_t>& targets) {
    if (targets.empty()) throw validation_error("targets must name at least one color");
    for (std::size_t s = 0; s < targets.size(); ++s) {
        if (targets[s] < 1) {
            throw validation_error("target for color " + std::to_string(s + 1) + " must be >= 1");
        }
    }
}

}  // namespace

StrategyWalk StrategyWalk::make(int colors, const std::vector<int>& entries) {
    if (colors < 1) throw validation_error("a walk needs at least one color");
    if (colors > 255) throw validation_error("at most 255 colors supported");
    std::vector<std::uint8_t> raw;
    raw.reserve(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        int c = entries[i];
        if (c < 1 || c > colors) {
            throw validation_error("walk entry " + std::to_string(i) + " is color " + std::to_string(c) +
                                   ", outside {1.." + std::to_string(colors) + "}");
        }
        raw.push_back(static_cast<std::uint8_t>(c));
    }
    return from_raw(colors, std::move(raw));
}

StrategyWalk StrategyWalk::from_raw(int colors, std::vector<std::uint8_t> entries) {
    if (colors < 1) throw validation_error("a walk needs at least one color");
    StrategyWalk w;
    w.colors_ = colors;
    w.targets_ = derive_targets(colors, entries);
    w.entries_ = std::move(entries);
    return w;
}

std::vector<WalkPosition> positions(const StrategyWalk& walk) {
    std::vector<WalkPosition> out;
    out.reserve(static_cast<std::size_t>(walk.length()) + 1);
    std::vector<std::int64_t> coords(static_cast<std::size_t>(walk.colors()), 1);
    out.push_back(WalkPosition{0, coords});
    std::int64_t step = 0;
    for (std::uint8_t c : walk.entries()) {
        ++coords[static_cast<std::size_t>(c - 1)];
        out.push_back(WalkPosition{++step, coords});
    }
    return out;
}

int128 walk_count(const std::vector<std::int64_t>& targets) {
    validate_targets(targets);
    // Multinomial d! / prod (l_s - 1)!, built from successive exact binomials.
    int128 count = 1;
    int128 placed = 0;
    for (std::int64_t t : targets) {
        for (std::int64_t j = 1; j <= t - 1; ++j) {
            placed += 1;
            count = checked_mul(count, placed, "walk count");
            count /= j;
        }
    }
    return count;
}

void enumerate_walks(const std::vector<std::int64_t>& targets,
                     const std::function<bool(const StrategyWalk&)>& yield) {
    validate_targets(targets);
    int colors = static_cast<int>(targets.size());
    std::int64_t total = 0;
    for (std::int64_t t : targets) total += t - 1;

    std::vector<std::int64_t> remaining(targets.size());
    for (std::size_t s = 0; s < targets.size(); ++s) remaining[s] = targets[s] - 1;

    std::vector<std::uint8_t> entries(static_cast<std::size_t>(total));
    bool stopped = false;

    auto recurse = [&](auto&& self, std::int64_t depth) -> void {
        if (stopped) return;
        if (depth == total) {
            StrategyWalk w = StrategyWalk::from_raw(colors, entries);
            if (!yield(w)) stopped = true;
            return;
        }
        for (int c = 1; c <= colors && !stopped; ++c) {
            if (remaining[static_cast<std::size_t>(c - 1)] == 0) continue;
            --remaining[static_cast<std::size_t>(c - 1)];
            entries[static_cast<std::size_t>(depth)] = static_cast<std::uint8_t>(c);
            self(self, depth + 1);
            ++remaining[static_cast<std::size_t>(c - 1)];
        }
    };
    recurse(recurse, 0);
}

StrategyWalk greedy_walk(const std::vector<std::int64_t>& targets) {
    validate_targets(targets);
    std::vector<std::uint8_t> entries;
    for (int c = static_cast<int>(targets.size()); c >= 1; --c) {
        for (std::int64_t j = 0; j < targets[static_cast<std::size_t>(c - 1)] - 1; ++j) {
            entries.push_back(static_cast<std::uint8_t>(c));
        }
    }
    return StrategyWalk::from_raw(static_cast<int>(targets.size()), std::move(entries));
}

StrategyWalk swap_colors(const StrategyWalk& walk) {
    if (walk.colors() != 2) {
        throw validation_error("swap_colors is only defined for two colors, got r=" +
                               std::to_string(walk.colors()));
    }
    std::vector<std::uint8_t> entries(walk.entries());
    for (auto& c : entries) c = static_cast<std::uint8_t>(3 - c);
    return StrategyWalk::from_raw(2, std::move(entries));
}

std::optional<ColorChoice> choose_color(const StrategyWalk& walk,
                                        const std::vector<std::int64_t>& lambda) {
    const auto& targets = walk.targets();
    if (lambda.size() != targets.size()) {
        throw validation_error("lambda has " + std::to_string(lambda.size()) + " coordinates, walk has " +
                               std::to_string(targets.size()) + " colors");
    }
    bool all_at_target = true;
    for (std::size_t s = 0; s < lambda.size(); ++s) {
        if (lambda[s] < 1 || lambda[s] > targets[s]) {
            throw validation_error("lambda coordinate " + std::to_string(s + 1) + " = " +
                                   std::to_string(lambda[s]) + " outside [1," +
                                   std::to_string(targets[s]) + "]");
        }
        if (lambda[s] < targets[s]) all_at_target = false;
    }
    if (all_at_target) return std::nullopt;  // walk never leaves the box

    // Scan for the first step that exits the box [1,lambda_1] x ... x [1,lambda_r].
    std::vector<std::int64_t> coords(lambda.size(), 1);
    const auto& entries = walk.entries();
    for (std::size_t i = 0; i < entries.size(); ++i) {
        std::size_t s = static_cast<std::size_t>(entries[i] - 1);
        if (coords[s] >= lambda[s]) {
            return ColorChoice{static_cast<std::int64_t>(i), static_cast<int>(entries[i])};
        }
        ++coords[s];
    }
    throw internal_error("choose_color: walk never left a proper sub-box");
}

StrategyWalk parse_walk(std::string_view text, int min_colors) {
    std::vector<std::uint8_t> entries;
    int max_color = std::max(min_colors, 1);

    std::string token;
    auto flush = [&]() {
        if (token.empty()) return;
        std::size_t caret = token.find('^');
        std::string color_part = caret == std::string::npos ? token : token.substr(0, caret);
        std::string count_part = caret == std::string::npos ? "1" : token.substr(caret + 1);
        int128 color = parse_int128(color_part);
        int128 count = parse_int128(count_part);
        if (color < 1 || color > 255) {
            throw validation_error("walk color out of range in token '" + token + "'");
        }
        if (count < 0 || count > (int128(1) << 31)) {
            throw validation_error("walk run length out of range in token '" + token + "'");
        }
        max_color = std::max(max_color, static_cast<int>(color));
        for (int128 i = 0; i < count; ++i) entries.push_back(static_cast<std::uint8_t>(color));
        token.clear();
    };

    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        if (c == ',') {
            if (token.empty()) throw validation_error("malformed walk text: empty token");
            flush();
        } else {
            token.push_back(c);
        }
    }
    flush();
    return StrategyWalk::from_raw(max_color, std::move(entries));
}

std::string to_run_length(const StrategyWalk& walk) {
    const auto& entries = walk.entries();
    std::string out;
    std::size_t i = 0;
    while (i < entries.size()) {
        std::size_t j = i;
        while (j < entries.size() && entries[j] == entries[i]) ++j;
        if (!out.empty()) out += ",";
        out += std::to_string(static_cast<int>(entries[i]));
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

}  // namespace pathram::walks
