#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string_view>
#include <vector>

#include "arena/core.hpp"
#include "arena/rng.hpp"
#include "arena/runlog.hpp"

namespace testutil {

inline arena::ParamVector vec(arena::GameId game, std::initializer_list<double> v) {
    return {game, std::vector<double>(v)};
}

inline arena::ParamVector vec(arena::GameId game, std::vector<double> v) {
    return {game, std::move(v)};
}

// Reference strategies from the card-ordering family.
inline arena::ParamVector descending(arena::GameId g) { return vec(g, {-20.0, -20.0, 20.0}); }
inline arena::ParamVector ascending(arena::GameId g) { return vec(g, {-20.0, 20.0, -20.0}); }
inline arena::ParamVector random_order(arena::GameId g) { return vec(g, {20.0, -20.0, -20.0}); }

// Reference question-size strategies, all expressible in the quartic family
// (alpha, gamma, zeta, iota).
inline arena::ParamVector gw_dichotomy() {
    return vec(arena::GameId::GuessWho, {0.0, 0.0, 0.0, 0.0});
}
inline arena::ParamVector gw_linear_risk() {
    return vec(arena::GameId::GuessWho, {1.0, 0.0, 0.0, 0.0});
}
inline arena::ParamVector gw_quadratic_risk() {
    return vec(arena::GameId::GuessWho, {-0.25, -1.5, 0.0, 0.0});
}
inline arena::ParamVector gw_quartic_risk() {
    return vec(arena::GameId::GuessWho, {-0.56, -1.58, -0.06, -0.022});
}

struct Bernoulli {
    double p;
    arena::Rng rng;

    Bernoulli(double p, arena::Seed seed) : p(p), rng(seed) {}
    double operator()() { return rng.next_double() < p ? 1.0 : 0.0; }
};

inline double chi_square_stat(std::span<const std::uint64_t> counts,
                              std::span<const double> expected) {
    double stat = 0.0;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        const double d = static_cast<double>(counts[i]) - expected[i];
        stat += d * d / expected[i];
    }
    return stat;
}

// Wilson-Hilferty approximation of the chi-square quantile.
inline double chi_square_quantile(double df, double z) {
    const double a = 2.0 / (9.0 * df);
    const double t = 1.0 - a + z * std::sqrt(a);
    return df * t * t * t;
}
inline double chi_square_crit_999(double df) { return chi_square_quantile(df, 3.0902); }

// RunLog scans used by several optimizer tests.
inline std::vector<const arena::LogEvent*> events_of(const arena::RunLog& log,
                                                     std::string_view type) {
    std::vector<const arena::LogEvent*> out;
    for (const auto& e : log.events)
        if (e.type == type) out.push_back(&e);
    return out;
}

inline std::uint64_t sum_race_games(const arena::RunLog& log) {
    std::uint64_t total = 0;
    for (const auto* e : events_of(log, "race")) total += std::stoull(*e->get("games"));
    for (const auto* e : events_of(log, "round")) total += std::stoull(*e->get("games"));
    return total;
}

}  // namespace testutil
