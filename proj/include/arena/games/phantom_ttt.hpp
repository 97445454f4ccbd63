#pragma once

#include <cstdint>
#include <span>

#include "arena/core.hpp"
#include "arena/rng.hpp"

namespace arena::games::phantom_ttt {

inline constexpr std::size_t kCells = 9;

// Blind tic-tac-toe. The referee draws one uniform permutation of the cells
// per game. Each player repeatedly nominates the highest-priority cell among
// those they do not already occupy (ties to the lower cell index); a
// nomination landing on an occupied cell is redirected to the next free cell
// in permutation order, cyclically. Players see only where their own stones
// end up. Priorities: 9 values for the first seat, 9 for the second.
MatchOutcome play(std::span<const double> priorities_first,
                  std::span<const double> priorities_second, Seed);

}  // namespace arena::games::phantom_ttt
