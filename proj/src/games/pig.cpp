#include "arena/games/pig.hpp"

namespace arena::games::pig {

bool should_hold(double hold_threshold, int my_score, int /*opponent_score*/,
                 int turn_total) noexcept {
    return static_cast<double>(turn_total) >= hold_threshold ||
           my_score + turn_total >= kTargetScore;
}

MatchOutcome play(double threshold_first, double threshold_second, Seed seed) {
    Rng rng(seed);
    const double thresholds[2] = {threshold_first, threshold_second};
    int scores[2] = {0, 0};
    std::uint64_t rolls = 0;
    for (int mover = 0;; mover ^= 1) {
        int turn_total = 0;
        for (;;) {
            const int die = 1 + static_cast<int>(rng.next_below(6));
            ++rolls;
            if (die == 1) {
                turn_total = 0;
                break;
            }
            turn_total += die;
            if (should_hold(thresholds[mover], scores[mover], scores[mover ^ 1],
                            turn_total))
                break;
        }
        scores[mover] += turn_total;
        if (scores[mover] >= kTargetScore)
            return {mover == 0 ? MatchResult::WinFirst : MatchResult::WinSecond,
                    rolls};
    }
}

}  // namespace arena::games::pig
