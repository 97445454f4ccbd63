#pragma once

#include "arena/core.hpp"
#include "arena/rng.hpp"

namespace arena::games::logistic {

// Synthetic one-parameter game with fully transitive strength: the first
// player wins with probability logistic(x_first - x_second). Useful as a
// diagnostic target where "improvement" is well-defined.
double win_probability(double x_first, double x_second) noexcept;

MatchOutcome play(double x_first, double x_second, Seed);

// Deterministic limit of the same idea: the higher parameter always wins,
// equal parameters draw. No randomness at all.
MatchOutcome play_step(double x_first, double x_second) noexcept;

}  // namespace arena::games::logistic
