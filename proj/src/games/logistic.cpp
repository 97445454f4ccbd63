#include "arena/games/logistic.hpp"

#include <cmath>

namespace arena::games::logistic {

double win_probability(double x_first, double x_second) noexcept {
    const double d = x_first - x_second;
    if (d >= 0.0) return 1.0 / (1.0 + std::exp(-d));
    const double e = std::exp(d);
    return e / (1.0 + e);
}

MatchOutcome play(double x_first, double x_second, Seed seed) {
    Rng rng(seed);
    const bool first_wins = rng.next_double() < win_probability(x_first, x_second);
    return {first_wins ? MatchResult::WinFirst : MatchResult::WinSecond, 1};
}

MatchOutcome play_step(double x_first, double x_second) noexcept {
    if (x_first > x_second) return {MatchResult::WinFirst, 1};
    if (x_second > x_first) return {MatchResult::WinSecond, 1};
    return {MatchResult::Draw, 1};
}

}  // namespace arena::games::logistic
