#pragma once

#include "arena/core.hpp"
#include "arena/rng.hpp"

namespace arena::games::pig {

inline constexpr int kTargetScore = 100;

// Hold once the turn total reaches the threshold, or as soon as banking it
// wins outright.
bool should_hold(double hold_threshold, int my_score, int opponent_score,
                 int turn_total) noexcept;

// Standard Pig with a d6: a 1 wipes the turn total, holding banks it, first
// to 100 wins. Each turn rolls at least once, so the game always makes
// progress even for thresholds at or below zero.
MatchOutcome play(double threshold_first, double threshold_second, Seed);

}  // namespace arena::games::pig
