#pragma once

#include <cstdint>
#include <span>

#include "arena/core.hpp"
#include "arena/rng.hpp"

namespace arena::games::guess_who {

inline constexpr std::uint32_t kDefaultCandidates = 128;

// Policy families, from the fixed halving rule up to a quartic risk curve in
// the candidate-count gap. Each family reads only its declared parameters.
enum class Family : std::uint8_t { Dichotomy, Linear, NonLinear, Quartic };

struct Params {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
    double zeta = 0.0;
    double iota = 0.0;
};

struct Policy {
    Family family = Family::Dichotomy;
    Params params;
};

// Vector layouts: Dichotomy [], Linear [alpha, beta],
// NonLinear [alpha, beta, gamma], Quartic [alpha, gamma, zeta, iota].
Policy policy_from_vector(Family, std::span<const double>);

// Candidate counts: n for the player about to ask, m for the opponent.
struct State {
    std::uint32_t n = 0;
    std::uint32_t m = 0;
};

// Size of the "yes" side of the next question, clamped into [1, n-1].
// Requires n >= 2. Families that read beta draw one uniform r per call.
std::uint32_t policy_choice(const Policy&, State, Rng&);

// Both hidden numbers are uniform; answers are truthful, so a question of
// size c keeps the asker's candidate set at c with probability c/n and at
// n - c otherwise. The first player whose set reaches one candidate wins,
// immediately after their own question.
MatchOutcome play(const Policy& first, const Policy& second,
                  std::uint32_t candidates, Seed);

}  // namespace arena::games::guess_who
