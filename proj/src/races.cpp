#include "arena/races.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace arena::races {

namespace {

void check_config(const RaceConfig& cfg) {
    if (!(cfg.epsilon > 0.0 && cfg.epsilon < 1.0))
        throw std::invalid_argument("race epsilon must be in (0, 1)");
    if (!(cfg.delta > 0.0 && cfg.delta < 1.0))
        throw std::invalid_argument("race delta must be in (0, 1)");
    if (cfg.max_games == 0)
        throw std::invalid_argument("race max_games must be positive");
}

struct RunningMoments {
    std::uint64_t n = 0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double x) noexcept {
        ++n;
        const double d = x - mean;
        mean += d / static_cast<double>(n);
        m2 += d * (x - mean);
    }
    double variance() const noexcept {
        return n > 0 ? m2 / static_cast<double>(n) : 0.0;
    }
};

RaceWinner side_of_half(double mean) noexcept {
    if (mean > 0.5) return RaceWinner::A;
    if (mean < 0.5) return RaceWinner::B;
    return RaceWinner::Incumbent;
}

RaceWinner higher_mean(double mean_a, double mean_b) noexcept {
    if (mean_a > mean_b) return RaceWinner::A;
    if (mean_b > mean_a) return RaceWinner::B;
    return RaceWinner::Incumbent;
}

}  // namespace

double checkpoint_delta(double delta, std::uint64_t t) noexcept {
    const double td = static_cast<double>(t);
    return 6.0 * delta / (std::numbers::pi * std::numbers::pi * td * td);
}

double bernstein_halfwidth(double variance_hat, std::uint64_t t,
                           double delta_t) noexcept {
    const double td = static_cast<double>(t);
    const double log_term = std::log(3.0 / delta_t);
    return std::sqrt(2.0 * variance_hat * log_term / td) + 3.0 * log_term / td;
}

RaceResult paired_race(const std::function<double()>& sampler,
                       const RaceConfig& cfg) {
    check_config(cfg);
    RunningMoments stats;
    for (;;) {
        stats.add(sampler());
        const std::uint64_t t = stats.n;
        if (t >= 2) {
            const double w =
                bernstein_halfwidth(stats.variance(), t, checkpoint_delta(cfg.delta, t));
            if (stats.mean - w > 0.5)
                return {RaceWinner::A, t, t, stats.mean, 1.0 - stats.mean,
                        HaltReason::Separated};
            if (stats.mean + w < 0.5)
                return {RaceWinner::B, t, t, stats.mean, 1.0 - stats.mean,
                        HaltReason::Separated};
            if (w < cfg.epsilon)
                return {side_of_half(stats.mean), t, t, stats.mean,
                        1.0 - stats.mean, HaltReason::PrecisionReached};
        }
        if (t >= cfg.max_games)
            return {side_of_half(stats.mean), t, t, stats.mean, 1.0 - stats.mean,
                    HaltReason::BudgetExhausted};
    }
}

RaceResult unpaired_race(const std::function<double()>& sampler_a,
                         const std::function<double()>& sampler_b,
                         const RaceConfig& cfg) {
    check_config(cfg);
    RunningMoments a, b;
    for (;;) {
        a.add(sampler_a());
        b.add(sampler_b());
        const std::uint64_t t = a.n;
        if (t >= 2) {
            // Two intervals per checkpoint share the checkpoint's risk.
            const double dt = checkpoint_delta(cfg.delta, t) / 2.0;
            const double wa = bernstein_halfwidth(a.variance(), t, dt);
            const double wb = bernstein_halfwidth(b.variance(), t, dt);
            if (a.mean - wa > b.mean + wb)
                return {RaceWinner::A, t, t, a.mean, b.mean, HaltReason::Separated};
            if (b.mean - wb > a.mean + wa)
                return {RaceWinner::B, t, t, a.mean, b.mean, HaltReason::Separated};
            if (wa < cfg.epsilon && wb < cfg.epsilon)
                return {higher_mean(a.mean, b.mean), t, t, a.mean, b.mean,
                        HaltReason::PrecisionReached};
        }
        if (a.n + b.n >= cfg.max_games)
            return {higher_mean(a.mean, b.mean), a.n, b.n, a.mean, b.mean,
                    HaltReason::BudgetExhausted};
    }
}

}  // namespace arena::races
