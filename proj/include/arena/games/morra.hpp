#pragma once

#include <array>
#include <cstdint>
#include <span>

#include "arena/core.hpp"
#include "arena/rng.hpp"

namespace arena::games::morra {

inline constexpr std::size_t kFingers = 6;   // 0..5 fingers shown
inline constexpr std::size_t kGuesses = 11;  // 0..10 guessed sum
inline constexpr std::size_t kActionCount = kFingers * kGuesses;

// Joint action (fingers f, guess g) lives at index 11*f + g.
constexpr std::size_t action_index(std::size_t fingers, std::size_t guess) noexcept {
    return kGuesses * fingers + guess;
}

// Softmax of the 66 logits, computed with max subtraction.
std::array<double, kActionCount> action_distribution(std::span<const double> logits);

// Inverse-CDF draw of one joint action.
std::size_t sample_action(const std::array<double, kActionCount>&, Rng&);

// One simultaneous round: each side samples a joint action from its
// distribution; whoever alone guesses the true finger sum wins, otherwise
// the round is a draw.
MatchOutcome play(std::span<const double> logits_first,
                  std::span<const double> logits_second, Seed);

}  // namespace arena::games::morra
