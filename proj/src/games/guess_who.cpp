#include "arena/games/guess_who.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace arena::games::guess_who {

Policy policy_from_vector(Family family, std::span<const double> v) {
    Policy p;
    p.family = family;
    switch (family) {
        case Family::Dichotomy:
            if (!v.empty()) throw std::invalid_argument("dichotomy takes no parameters");
            break;
        case Family::Linear:
            if (v.size() != 2) throw std::invalid_argument("linear family takes 2 parameters");
            p.params.alpha = v[0];
            p.params.beta = v[1];
            break;
        case Family::NonLinear:
            if (v.size() != 3) throw std::invalid_argument("nonlinear family takes 3 parameters");
            p.params.alpha = v[0];
            p.params.beta = v[1];
            p.params.gamma = v[2];
            break;
        case Family::Quartic:
            if (v.size() != 4) throw std::invalid_argument("quartic family takes 4 parameters");
            p.params.alpha = v[0];
            p.params.gamma = v[1];
            p.params.zeta = v[2];
            p.params.iota = v[3];
            break;
    }
    return p;
}

std::uint32_t policy_choice(const Policy& policy, State state, Rng& rng) {
    const double n = static_cast<double>(state.n);
    const double gap = n - static_cast<double>(state.m);
    const double delta = gap > 0.0 ? gap : 0.0;  // risk input: how far behind

    double alpha = 0.0, beta = 0.0, gamma = 0.0, zeta = 0.0, iota = 0.0;
    switch (policy.family) {
        case Family::Dichotomy:
            break;
        case Family::Linear:
            alpha = policy.params.alpha;
            beta = policy.params.beta;
            break;
        case Family::NonLinear:
            alpha = policy.params.alpha;
            beta = policy.params.beta;
            gamma = policy.params.gamma;
            break;
        case Family::Quartic:
            alpha = policy.params.alpha;
            gamma = policy.params.gamma;
            zeta = policy.params.zeta;
            iota = policy.params.iota;
            break;
    }

    const double ratio = delta / n;
    const double half = n / 2.0;
    double raw = half - alpha * delta / 2.0 + gamma * half * ratio * ratio +
                 zeta * half * ratio * ratio * ratio + iota * gap / 2.0;
    if (policy.family == Family::Linear || policy.family == Family::NonLinear) {
        const double r = rng.next_double();
        raw = beta * r * (n - 1.0) / 2.0 + (1.0 - beta) * raw;
    }

    const double floored = std::max(1.0, std::floor(raw));
    const double clamped = std::min(floored, n - 1.0);
    return static_cast<std::uint32_t>(clamped);
}

MatchOutcome play(const Policy& first, const Policy& second,
                  std::uint32_t candidates, Seed seed) {
    if (candidates < 2) throw std::invalid_argument("need at least 2 candidates");
    Rng rng(seed);
    const Policy* policies[2] = {&first, &second};
    std::uint32_t remaining[2] = {candidates, candidates};
    std::uint64_t questions = 0;

    for (int mover = 0;; mover ^= 1) {
        const std::uint32_t n = remaining[mover];
        const std::uint32_t c =
            policy_choice(*policies[mover], {n, remaining[mover ^ 1]}, rng);
        const bool yes = rng.next_double() * n < static_cast<double>(c);
        remaining[mover] = yes ? c : n - c;
        ++questions;
        if (remaining[mover] == 1)
            return {mover == 0 ? MatchResult::WinFirst : MatchResult::WinSecond,
                    questions};
    }
}

}  // namespace arena::games::guess_who
