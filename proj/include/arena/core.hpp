#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "arena/rng.hpp"

namespace arena {

enum class GameId : std::uint8_t {
    War,       // 52-card deck, 3 ordering weights
    War4,      // ordering weights plus a fixed-shuffle seed parameter
    Batawaf,   // 36-card deck, 3 ordering weights
    Batawaf4,
    GuessWhoLinear,     // alpha, beta
    GuessWhoNonLinear,  // alpha, beta, gamma
    GuessWho,           // alpha, gamma, zeta, iota (deterministic family)
    Morra,      // 66 joint-action logits
    Nim,        // 383 state values
    Pig,        // hold threshold
    PhantomTtt, // 9 + 9 cell priorities
    Logistic,   // 1-parameter transitive diagnostic game
    StepDuel,   // deterministic variant: the higher parameter always wins
};

inline constexpr GameId kAllGames[] = {
    GameId::War,      GameId::War4,           GameId::Batawaf,
    GameId::Batawaf4, GameId::GuessWhoLinear, GameId::GuessWhoNonLinear,
    GameId::GuessWho, GameId::Morra,          GameId::Nim,
    GameId::Pig,      GameId::PhantomTtt,     GameId::Logistic,
    GameId::StepDuel,
};

std::size_t param_count(GameId) noexcept;
std::string_view game_name(GameId) noexcept;
std::optional<GameId> game_from_name(std::string_view) noexcept;

// A strategy: the real-valued parameters of one game's policy family.
struct ParamVector {
    GameId game = GameId::War;
    std::vector<double> values;
};

// Throws std::invalid_argument if the vector does not belong to `game`, has
// the wrong length, or contains non-finite entries.
void validate_params(const ParamVector&, GameId);

enum class MatchResult : std::uint8_t { WinFirst, WinSecond, Draw };

struct MatchOutcome {
    MatchResult result = MatchResult::Draw;
    std::uint64_t moves_played = 0;
};

enum class Perspective : std::uint8_t { First, Second };

constexpr double score(MatchOutcome outcome, Perspective view) noexcept {
    switch (outcome.result) {
        case MatchResult::WinFirst:
            return view == Perspective::First ? 1.0 : 0.0;
        case MatchResult::WinSecond:
            return view == Perspective::Second ? 1.0 : 0.0;
        case MatchResult::Draw:
            return 0.5;
    }
    return 0.5;
}

// Empirical winning rate over a batch of games; draws count half a win.
struct WinStats {
    double wins = 0.0;
    std::uint64_t games = 0;
    double mean = 0.0;
    double std_err = 0.0;

    static WinStats from_wins(double wins, std::uint64_t games);
};

// Plays one game to termination. Deterministic per (arguments, seed); all
// randomness comes from a generator seeded with `seed`.
MatchOutcome play_match(GameId, const ParamVector& first, const ParamVector& second, Seed);

// n_games matches with per-match child seeds split_seed(seed, i); `a` takes
// the first seat on even i so seat advantage cancels. Stats are from a's
// side. Matches may run concurrently; the reduction is by match index, so
// the result does not depend on the thread count.
WinStats evaluate(GameId, const ParamVector& a, const ParamVector& b,
                  std::uint64_t n_games, Seed, unsigned threads = 1);

}  // namespace arena
