#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "arena/core.hpp"

namespace arena {

inline constexpr std::string_view kStrategyMagic = "po-arena-strategy v1";

// Line-based UTF-8 strategy container:
//
//   po-arena-strategy v1
//   game: batawaf
//   params: <f1> <f2> ...          (17 significant digits, space separated)
//   meta.<key>: <value>            (optional, repeated)
//
// Parameters survive a render/parse round trip bit-exactly.
struct StrategyFile {
    GameId game = GameId::War;
    std::vector<double> params;
    std::vector<std::pair<std::string, std::string>> meta;

    ParamVector to_params() const { return {game, params}; }
};

std::string render_strategy(const StrategyFile&);

// Throws std::runtime_error on any malformed content.
StrategyFile parse_strategy(std::string_view text);

// File wrappers; load also checks the parameter count against the game.
// Both throw std::runtime_error on I/O or format problems.
StrategyFile load_strategy(const std::filesystem::path&);
void save_strategy(const std::filesystem::path&, const StrategyFile&);

}  // namespace arena
