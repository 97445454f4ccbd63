#pragma once

#include <cstdint>
#include <functional>

namespace arena::races {

// Sequential comparison of two players with total error probability delta
// over all stopping checkpoints, after Mnih, Szepesvari & Audibert,
// "Empirical Bernstein stopping" (ICML 2008). Checkpoints run after every
// game with the per-checkpoint allocation delta_t = 6*delta/(pi^2*t^2), so
// the union bound holds no matter when the race halts. The race also stops
// once the winning rate is pinned down to precision epsilon ("limited race").
struct RaceConfig {
    double epsilon = 0.01;                  // precision cutoff
    double delta = 0.05;                    // total error probability
    std::uint64_t max_games = 1'000'000;    // hard safety cap per race
};

enum class RaceWinner : std::uint8_t { A, B, Incumbent };
enum class HaltReason : std::uint8_t { Separated, PrecisionReached, BudgetExhausted };

struct RaceResult {
    RaceWinner winner = RaceWinner::Incumbent;
    std::uint64_t games_a = 0;
    std::uint64_t games_b = 0;
    double mean_a = 0.0;
    double mean_b = 0.0;
    HaltReason halt = HaltReason::BudgetExhausted;
};

// Risk allocated to checkpoint t; sums to at most delta over t >= 1.
double checkpoint_delta(double delta, std::uint64_t t) noexcept;

// Empirical Bernstein deviation bound for t samples in [0, 1] with empirical
// variance variance_hat: sqrt(2*v*ln(3/d)/t) + 3*ln(3/d)/t.
double bernstein_halfwidth(double variance_hat, std::uint64_t t,
                           double delta_t) noexcept;

// Head-to-head race. sampler yields the score of one A-versus-B game in
// {0, 0.5, 1} and must be i.i.d. per call. Halts Separated once the
// confidence interval around A's mean excludes 0.5, PrecisionReached once
// the halfwidth drops below epsilon (winner is the side of 0.5 the mean
// lies on; an exact tie keeps the incumbent), BudgetExhausted at max_games.
RaceResult paired_race(const std::function<double()>& sampler, const RaceConfig&);

// Two players measured against a common baseline, one sample from each per
// step. Halts Separated when the two confidence intervals disconnect,
// PrecisionReached when both halfwidths are below epsilon (higher mean wins,
// ties keep the incumbent), BudgetExhausted when total games reach max_games.
RaceResult unpaired_race(const std::function<double()>& sampler_a,
                         const std::function<double()>& sampler_b,
                         const RaceConfig&);

}  // namespace arena::races
