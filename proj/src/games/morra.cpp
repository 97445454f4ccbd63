#include "arena/games/morra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace arena::games::morra {

std::size_t sample_action(const std::array<double, kActionCount>& dist, Rng& rng) {
    const double u = rng.next_double();
    double cum = 0.0;
    for (std::size_t i = 0; i + 1 < kActionCount; ++i) {
        cum += dist[i];
        if (u < cum) return i;
    }
    return kActionCount - 1;
}

std::array<double, kActionCount> action_distribution(std::span<const double> logits) {
    if (logits.size() != kActionCount)
        throw std::invalid_argument("morra takes 66 logits");
    std::array<double, kActionCount> out;
    const double m = *std::max_element(logits.begin(), logits.end());
    double sum = 0.0;
    for (std::size_t i = 0; i < kActionCount; ++i) {
        out[i] = std::exp(logits[i] - m);
        sum += out[i];
    }
    for (auto& p : out) p /= sum;
    return out;
}

MatchOutcome play(std::span<const double> logits_first,
                  std::span<const double> logits_second, Seed seed) {
    const auto dist_first = action_distribution(logits_first);
    const auto dist_second = action_distribution(logits_second);
    Rng rng(seed);
    const std::size_t a = sample_action(dist_first, rng);
    const std::size_t b = sample_action(dist_second, rng);
    const std::size_t sum = a / kGuesses + b / kGuesses;
    const bool first_right = a % kGuesses == sum;
    const bool second_right = b % kGuesses == sum;
    if (first_right == second_right) return {MatchResult::Draw, 1};
    return {first_right ? MatchResult::WinFirst : MatchResult::WinSecond, 1};
}

}  // namespace arena::games::morra
