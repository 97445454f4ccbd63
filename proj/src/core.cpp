#include "arena/core.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "arena/games/guess_who.hpp"
#include "arena/games/logistic.hpp"
#include "arena/games/morra.hpp"
#include "arena/games/nim.hpp"
#include "arena/games/phantom_ttt.hpp"
#include "arena/games/pig.hpp"
#include "arena/games/war.hpp"
#include "arena/parallel.hpp"

namespace arena {

std::size_t param_count(GameId game) noexcept {
    switch (game) {
        case GameId::War: return 3;
        case GameId::War4: return 4;
        case GameId::Batawaf: return 3;
        case GameId::Batawaf4: return 4;
        case GameId::GuessWhoLinear: return 2;
        case GameId::GuessWhoNonLinear: return 3;
        case GameId::GuessWho: return 4;
        case GameId::Morra: return games::morra::kActionCount;
        case GameId::Nim: return games::nim::kNonTerminalStates;
        case GameId::Pig: return 1;
        case GameId::PhantomTtt: return 18;
        case GameId::Logistic: return 1;
        case GameId::StepDuel: return 1;
    }
    return 0;
}

std::string_view game_name(GameId game) noexcept {
    switch (game) {
        case GameId::War: return "war";
        case GameId::War4: return "war4";
        case GameId::Batawaf: return "batawaf";
        case GameId::Batawaf4: return "batawaf4";
        case GameId::GuessWhoLinear: return "guesswho-linear";
        case GameId::GuessWhoNonLinear: return "guesswho-nonlinear";
        case GameId::GuessWho: return "guesswho";
        case GameId::Morra: return "morra";
        case GameId::Nim: return "nim";
        case GameId::Pig: return "pig";
        case GameId::PhantomTtt: return "phantom-ttt";
        case GameId::Logistic: return "logistic";
        case GameId::StepDuel: return "step";
    }
    return "unknown";
}

std::optional<GameId> game_from_name(std::string_view name) noexcept {
    for (GameId g : kAllGames)
        if (game_name(g) == name) return g;
    return std::nullopt;
}

void validate_params(const ParamVector& params, GameId game) {
    if (params.game != game)
        throw std::invalid_argument(
            std::string("strategy is for ") + std::string(game_name(params.game)) +
            ", not " + std::string(game_name(game)));
    if (params.values.size() != param_count(game))
        throw std::invalid_argument(
            std::string(game_name(game)) + " takes " +
            std::to_string(param_count(game)) + " parameters, got " +
            std::to_string(params.values.size()));
    for (double v : params.values)
        if (!std::isfinite(v))
            throw std::invalid_argument("strategy parameters must be finite");
}

WinStats WinStats::from_wins(double wins, std::uint64_t games) {
    if (games == 0) throw std::invalid_argument("need at least one game");
    WinStats s;
    s.wins = wins;
    s.games = games;
    s.mean = wins / static_cast<double>(games);
    s.std_err = std::sqrt(s.mean * (1.0 - s.mean) / static_cast<double>(games));
    return s;
}

MatchOutcome play_match(GameId game, const ParamVector& first,
                        const ParamVector& second, Seed seed) {
    validate_params(first, game);
    validate_params(second, game);
    const auto& f = first.values;
    const auto& s = second.values;
    using games::war::Variant;
    switch (game) {
        case GameId::War:
        case GameId::War4:
            return games::war::play(Variant::War, games::war::params_from_vector(f),
                                    games::war::params_from_vector(s), seed);
        case GameId::Batawaf:
        case GameId::Batawaf4:
            return games::war::play(Variant::Batawaf,
                                    games::war::params_from_vector(f),
                                    games::war::params_from_vector(s), seed);
        case GameId::GuessWhoLinear:
            return games::guess_who::play(
                games::guess_who::policy_from_vector(games::guess_who::Family::Linear, f),
                games::guess_who::policy_from_vector(games::guess_who::Family::Linear, s),
                games::guess_who::kDefaultCandidates, seed);
        case GameId::GuessWhoNonLinear:
            return games::guess_who::play(
                games::guess_who::policy_from_vector(games::guess_who::Family::NonLinear, f),
                games::guess_who::policy_from_vector(games::guess_who::Family::NonLinear, s),
                games::guess_who::kDefaultCandidates, seed);
        case GameId::GuessWho:
            return games::guess_who::play(
                games::guess_who::policy_from_vector(games::guess_who::Family::Quartic, f),
                games::guess_who::policy_from_vector(games::guess_who::Family::Quartic, s),
                games::guess_who::kDefaultCandidates, seed);
        case GameId::Morra:
            return games::morra::play(f, s, seed);
        case GameId::Nim:
            return games::nim::play(f, s);
        case GameId::Pig:
            return games::pig::play(f[0], s[0], seed);
        case GameId::PhantomTtt:
            // 18 entries per strategy: a seat-first half and a seat-second half.
            return games::phantom_ttt::play(std::span(f).first(9),
                                            std::span(s).subspan(9), seed);
        case GameId::Logistic:
            return games::logistic::play(f[0], s[0], seed);
        case GameId::StepDuel:
            return games::logistic::play_step(f[0], s[0]);
    }
    throw std::invalid_argument("unknown game");
}

WinStats evaluate(GameId game, const ParamVector& a, const ParamVector& b,
                  std::uint64_t n_games, Seed seed, unsigned threads) {
    if (n_games == 0) throw std::invalid_argument("need at least one game");
    validate_params(a, game);
    validate_params(b, game);
    std::vector<double> scores(n_games);
    parallel_for(n_games, threads, [&](std::size_t i) {
        const Seed match_seed = split_seed(seed, i);
        const bool a_first = i % 2 == 0;
        const MatchOutcome outcome = a_first ? play_match(game, a, b, match_seed)
                                             : play_match(game, b, a, match_seed);
        scores[i] = score(outcome, a_first ? Perspective::First : Perspective::Second);
    });
    double wins = 0.0;
    for (double s : scores) wins += s;
    return WinStats::from_wins(wins, n_games);
}

}  // namespace arena
