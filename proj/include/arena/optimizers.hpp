#pragma once

#include <cstdint>
#include <optional>

#include "arena/core.hpp"
#include "arena/races.hpp"
#include "arena/rng.hpp"
#include "arena/runlog.hpp"

namespace arena::optimizers {

// Run limits. Game counts are the reproducible contract; wall-clock limits
// exist for long unattended runs and make results machine-dependent.
struct Budget {
    std::optional<std::uint64_t> max_games;
    std::optional<double> max_seconds;
};

struct OptimizeResult {
    ParamVector best;
    RunLog log;
    // Set when the budget did not allow a single full comparison (or, for the
    // seed method, a single round-robin); best is then the unmodified input
    // or a lone random individual.
    bool budget_too_small = false;
};

// Componentwise Gaussian perturbation; the input is left untouched.
ParamVector mutate(const ParamVector&, double sigma, Rng&);

// One-fifth-style rule: double on success, multiply by 0.84 on failure.
double step_size_update(double sigma, bool success) noexcept;

// Independent standard Gaussian parameters; deterministic per (game, seed).
ParamVector make_baseline(GameId, Seed);

// (1+1)-ES against a fixed baseline: both the incumbent and the mutant are
// measured against `baseline` in an unpaired race; the mutant is kept only
// on a race win.
OptimizeResult naive_es(GameId, const ParamVector& baseline, const Budget&,
                        const races::RaceConfig&, Seed);

// (1+1)-ES with direct head-to-head races: the mutant must beat the current
// incumbent.
OptimizeResult iterative_es(GameId, const ParamVector& initial, const Budget&,
                            const races::RaceConfig&, Seed);

// The mutant must beat every member of the population of all previously
// accepted points; acceptance appends it. population_cap (if set) evicts the
// oldest member first.
OptimizeResult real_coevolution(GameId, const ParamVector& initial, const Budget&,
                                const races::RaceConfig&, Seed,
                                std::optional<std::size_t> population_cap = {});

// The mutant races one population member drawn uniformly at random.
OptimizeResult approx_coevolution(GameId, const ParamVector& initial, const Budget&,
                                  const races::RaceConfig&, Seed,
                                  std::optional<std::size_t> population_cap = {});

struct SeedMethodConfig {
    std::uint32_t population_size = 16;  // K, doubled while budget remains
    std::uint32_t games_per_pair = 1;
};

// No mutation, no iteration: sample K random individuals, play a full
// round-robin, keep the best average scorer. While budget remains K doubles;
// earlier individuals stay in the pool and keep accumulating statistics.
OptimizeResult seed_method(GameId, const SeedMethodConfig&, const Budget&, Seed,
                           unsigned threads = 1);

}  // namespace arena::optimizers
