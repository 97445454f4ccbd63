#include "arena/optimizers.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "arena/parallel.hpp"

namespace arena::optimizers {

namespace {

using races::HaltReason;
using races::RaceResult;
using races::RaceWinner;

// Child-stream indices under the run seed.
constexpr std::uint64_t kMutationStream = 1;
constexpr std::uint64_t kSeatStream = 2;
constexpr std::uint64_t kMatchStream = 3;
constexpr std::uint64_t kOpponentStream = 4;

class BudgetTracker {
  public:
    explicit BudgetTracker(const Budget& budget) : budget_(budget) {
        if (!budget.max_games && !budget.max_seconds)
            throw std::invalid_argument("budget needs a game or time limit");
        start_ = std::chrono::steady_clock::now();
    }

    bool exhausted() const {
        if (budget_.max_games && games_ >= *budget_.max_games) return true;
        return out_of_time();
    }

    // Whether `more` further games fit without crossing the game limit.
    bool fits(std::uint64_t more) const {
        if (budget_.max_games && games_ + more > *budget_.max_games) return false;
        return !out_of_time();
    }

    void charge(std::uint64_t games) { games_ += games; }
    std::uint64_t games() const { return games_; }

  private:
    bool out_of_time() const {
        if (!budget_.max_seconds) return false;
        const std::chrono::duration<double> elapsed =
            std::chrono::steady_clock::now() - start_;
        return elapsed.count() >= *budget_.max_seconds;
    }

    Budget budget_;
    std::uint64_t games_ = 0;
    std::chrono::steady_clock::time_point start_;
};

const char* winner_text(RaceWinner w) {
    switch (w) {
        case RaceWinner::A: return "a";
        case RaceWinner::B: return "b";
        case RaceWinner::Incumbent: return "tie";
    }
    return "?";
}

const char* halt_text(HaltReason h) {
    switch (h) {
        case HaltReason::Separated: return "separated";
        case HaltReason::PrecisionReached: return "precision";
        case HaltReason::BudgetExhausted: return "budget";
    }
    return "?";
}

void log_start(RunLog& log, const char* method, GameId game, Seed seed,
               const Budget& budget, const races::RaceConfig* race_cfg) {
    std::vector<std::pair<std::string, std::string>> kv{
        {"method", method},
        {"game", std::string(game_name(game))},
        {"seed", log_num(seed.value)},
    };
    if (budget.max_games) kv.emplace_back("budget_games", log_num(*budget.max_games));
    if (budget.max_seconds) kv.emplace_back("budget_seconds", log_num(*budget.max_seconds));
    if (race_cfg) {
        kv.emplace_back("epsilon", log_num(race_cfg->epsilon));
        kv.emplace_back("delta", log_num(race_cfg->delta));
    }
    log.add("start", std::move(kv));
}

void log_race(RunLog& log, std::uint64_t iter, const RaceResult& r,
              std::uint64_t games_charged) {
    log.add("race", {{"iter", log_num(iter)},
                     {"winner", winner_text(r.winner)},
                     {"games", log_num(games_charged)},
                     {"mean_a", log_num(r.mean_a)},
                     {"mean_b", log_num(r.mean_b)},
                     {"halt", halt_text(r.halt)}});
}

void log_race_vs(RunLog& log, std::uint64_t iter, std::size_t opponent,
                 std::size_t pop_size, const RaceResult& r,
                 std::uint64_t games_charged) {
    log.add("race", {{"iter", log_num(iter)},
                     {"opponent", log_num(static_cast<std::uint64_t>(opponent))},
                     {"pop", log_num(static_cast<std::uint64_t>(pop_size))},
                     {"winner", winner_text(r.winner)},
                     {"games", log_num(games_charged)},
                     {"mean_a", log_num(r.mean_a)},
                     {"mean_b", log_num(r.mean_b)},
                     {"halt", halt_text(r.halt)}});
}

// Score stream of a-versus-b games; the seat is drawn per call so samples
// are i.i.d., and every match consumes a fresh child seed.
std::function<double()> pair_sampler(GameId game, const ParamVector& a,
                                     const ParamVector& b, Seed match_root,
                                     std::uint64_t& match_counter, Rng& seat_rng) {
    return [game, &a, &b, match_root, &match_counter, &seat_rng]() {
        const Seed s = split_seed(match_root, match_counter++);
        const bool a_first = seat_rng.next_below(2) == 0;
        const MatchOutcome outcome = a_first ? play_match(game, a, b, s)
                                             : play_match(game, b, a, s);
        return score(outcome, a_first ? Perspective::First : Perspective::Second);
    };
}

void finish(RunLog& log, BudgetTracker& tracker, bool too_small) {
    if (too_small) log.add("warn", {{"reason", "budget-too-small"}});
    log.add("end", {{"games", log_num(tracker.games())}});
    log.games_played = tracker.games();
}

}  // namespace

ParamVector mutate(const ParamVector& x, double sigma, Rng& rng) {
    if (!(sigma > 0.0)) throw std::invalid_argument("sigma must be positive");
    ParamVector out = x;
    for (auto& v : out.values) v += sigma * rng.next_gaussian();
    return out;
}

double step_size_update(double sigma, bool success) noexcept {
    return success ? 2.0 * sigma : 0.84 * sigma;
}

ParamVector make_baseline(GameId game, Seed seed) {
    Rng rng(seed);
    ParamVector v{game, std::vector<double>(param_count(game))};
    for (auto& x : v.values) x = rng.next_gaussian();
    return v;
}

OptimizeResult naive_es(GameId game, const ParamVector& baseline,
                        const Budget& budget, const races::RaceConfig& race_cfg,
                        Seed seed) {
    validate_params(baseline, game);
    BudgetTracker tracker(budget);
    RunLog log;
    log_start(log, "naive", game, seed, budget, &race_cfg);

    ParamVector x = baseline;
    double sigma = 1.0;
    Rng mutation_rng(split_seed(seed, kMutationStream));
    Rng seat_rng(split_seed(seed, kSeatStream));
    const Seed match_root = split_seed(seed, kMatchStream);
    std::uint64_t match_counter = 0;
    std::uint64_t iter = 0, races_completed = 0;

    while (!tracker.exhausted()) {
        ++iter;
        const ParamVector cand = mutate(x, sigma, mutation_rng);
        const RaceResult r = races::unpaired_race(
            pair_sampler(game, cand, baseline, match_root, match_counter, seat_rng),
            pair_sampler(game, x, baseline, match_root, match_counter, seat_rng),
            race_cfg);
        const std::uint64_t charged = r.games_a + r.games_b;
        tracker.charge(charged);
        log.games_played = tracker.games();
        ++races_completed;
        log_race(log, iter, r, charged);
        const bool success = r.winner == RaceWinner::A;
        sigma = step_size_update(sigma, success);
        if (success) {
            x = cand;
            log.add("accept", {{"iter", log_num(iter)}, {"sigma", log_num(sigma)}});
        } else {
            log.add("reject", {{"iter", log_num(iter)}, {"sigma", log_num(sigma)}});
        }
    }
    const bool too_small = races_completed == 0;
    finish(log, tracker, too_small);
    return {std::move(x), std::move(log), too_small};
}

OptimizeResult iterative_es(GameId game, const ParamVector& initial,
                            const Budget& budget, const races::RaceConfig& race_cfg,
                            Seed seed) {
    validate_params(initial, game);
    BudgetTracker tracker(budget);
    RunLog log;
    log_start(log, "iterative", game, seed, budget, &race_cfg);

    ParamVector x = initial;
    double sigma = 1.0;
    Rng mutation_rng(split_seed(seed, kMutationStream));
    Rng seat_rng(split_seed(seed, kSeatStream));
    const Seed match_root = split_seed(seed, kMatchStream);
    std::uint64_t match_counter = 0;
    std::uint64_t iter = 0, races_completed = 0;

    while (!tracker.exhausted()) {
        ++iter;
        const ParamVector cand = mutate(x, sigma, mutation_rng);
        const RaceResult r = races::paired_race(
            pair_sampler(game, cand, x, match_root, match_counter, seat_rng),
            race_cfg);
        tracker.charge(r.games_a);
        log.games_played = tracker.games();
        ++races_completed;
        log_race(log, iter, r, r.games_a);
        const bool success = r.winner == RaceWinner::A;
        sigma = step_size_update(sigma, success);
        if (success) {
            x = cand;
            log.add("accept", {{"iter", log_num(iter)}, {"sigma", log_num(sigma)}});
        } else {
            log.add("reject", {{"iter", log_num(iter)}, {"sigma", log_num(sigma)}});
        }
    }
    const bool too_small = races_completed == 0;
    finish(log, tracker, too_small);
    return {std::move(x), std::move(log), too_small};
}

namespace {

OptimizeResult coevolution(GameId game, const ParamVector& initial,
                           const Budget& budget, const races::RaceConfig& race_cfg,
                           Seed seed, std::optional<std::size_t> population_cap,
                           bool race_whole_population) {
    validate_params(initial, game);
    BudgetTracker tracker(budget);
    RunLog log;
    log_start(log, race_whole_population ? "coevol" : "approx-coevol", game, seed,
              budget, &race_cfg);

    ParamVector x = initial;
    std::vector<ParamVector> population{initial};
    double sigma = 1.0;
    Rng mutation_rng(split_seed(seed, kMutationStream));
    Rng seat_rng(split_seed(seed, kSeatStream));
    Rng opponent_rng(split_seed(seed, kOpponentStream));
    const Seed match_root = split_seed(seed, kMatchStream);
    std::uint64_t match_counter = 0;
    std::uint64_t iter = 0, races_completed = 0;

    while (!tracker.exhausted()) {
        ++iter;
        const ParamVector cand = mutate(x, sigma, mutation_rng);
        bool success = true;
        bool aborted = false;

        if (race_whole_population) {
            // Insertion order; the first lost race settles the attempt.
            for (std::size_t oi = 0; oi < population.size(); ++oi) {
                if (tracker.exhausted()) {
                    aborted = true;
                    break;
                }
                const RaceResult r = races::paired_race(
                    pair_sampler(game, cand, population[oi], match_root,
                                 match_counter, seat_rng),
                    race_cfg);
                tracker.charge(r.games_a);
                log.games_played = tracker.games();
                ++races_completed;
                log_race_vs(log, iter, oi, population.size(), r, r.games_a);
                if (r.winner != RaceWinner::A) {
                    success = false;
                    break;
                }
            }
        } else {
            const std::size_t oi =
                opponent_rng.next_below(static_cast<std::uint32_t>(population.size()));
            const RaceResult r = races::paired_race(
                pair_sampler(game, cand, population[oi], match_root, match_counter,
                             seat_rng),
                race_cfg);
            tracker.charge(r.games_a);
            log.games_played = tracker.games();
            ++races_completed;
            log_race_vs(log, iter, oi, population.size(), r, r.games_a);
            success = r.winner == RaceWinner::A;
        }

        if (aborted) {
            // Budget ran out mid-scan; the attempt is dropped unresolved.
            log.add("abort", {{"iter", log_num(iter)}, {"reason", "budget"}});
            break;
        }
        sigma = step_size_update(sigma, success);
        if (success) {
            x = cand;
            population.push_back(x);
            if (population_cap && population.size() > *population_cap)
                population.erase(population.begin());
            log.add("accept", {{"iter", log_num(iter)},
                               {"sigma", log_num(sigma)},
                               {"pop", log_num(static_cast<std::uint64_t>(population.size()))}});
        } else {
            log.add("reject", {{"iter", log_num(iter)}, {"sigma", log_num(sigma)}});
        }
    }
    const bool too_small = races_completed == 0;
    finish(log, tracker, too_small);
    return {std::move(x), std::move(log), too_small};
}

}  // namespace

OptimizeResult real_coevolution(GameId game, const ParamVector& initial,
                                const Budget& budget,
                                const races::RaceConfig& race_cfg, Seed seed,
                                std::optional<std::size_t> population_cap) {
    return coevolution(game, initial, budget, race_cfg, seed, population_cap, true);
}

OptimizeResult approx_coevolution(GameId game, const ParamVector& initial,
                                  const Budget& budget,
                                  const races::RaceConfig& race_cfg, Seed seed,
                                  std::optional<std::size_t> population_cap) {
    return coevolution(game, initial, budget, race_cfg, seed, population_cap, false);
}

namespace {

// Largest k with k*(k-1)/2 <= max_pairs, capped well below overflow.
std::uint64_t max_k_for_pairs(std::uint64_t max_pairs) {
    constexpr std::uint64_t kCap = 1ULL << 31;
    std::uint64_t k = static_cast<std::uint64_t>(
        (1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(max_pairs))) / 2.0);
    k = std::min(k, kCap);
    while (k > 0 && k * (k - 1) / 2 > max_pairs) --k;
    while (k < kCap && (k + 1) * k / 2 <= max_pairs) ++k;
    return k;
}

}  // namespace

OptimizeResult seed_method(GameId game, const SeedMethodConfig& cfg,
                           const Budget& budget, Seed seed, unsigned threads) {
    if (cfg.population_size < 2)
        throw std::invalid_argument("seed method needs a population of at least 2");
    if (cfg.games_per_pair == 0)
        throw std::invalid_argument("games per pair must be positive");
    BudgetTracker tracker(budget);
    RunLog log;
    log_start(log, "seed", game, seed, budget, nullptr);
    log.add("config", {{"pop_size", log_num(static_cast<std::uint64_t>(cfg.population_size))},
                       {"games_per_pair", log_num(static_cast<std::uint64_t>(cfg.games_per_pair))}});

    Rng draw_rng(split_seed(seed, kMutationStream));
    const Seed match_root = split_seed(seed, kMatchStream);
    const std::uint64_t per_pair = cfg.games_per_pair;

    std::vector<ParamVector> population;
    std::vector<double> score_sum;
    std::vector<std::uint64_t> games_count;

    std::uint64_t k = cfg.population_size;
    if (budget.max_games) {
        // The configured round may not fit a small budget; fall back to the
        // largest feasible population before giving up.
        const std::uint64_t cap = max_k_for_pairs(*budget.max_games / per_pair);
        if (cap < k) {
            k = cap;
            if (k >= 2)
                log.add("shrink", {{"k", log_num(k)}});
        }
    }

    std::uint64_t round = 0;
    std::size_t selected = 0;

    while (k >= 2) {
        const std::uint64_t pairs = k * (k - 1) / 2;
        const std::uint64_t round_games = pairs * per_pair;
        if (!tracker.fits(round_games)) break;

        while (population.size() < k) {
            population.push_back(make_baseline(game, Seed{draw_rng.next_u64()}));
            score_sum.push_back(0.0);
            games_count.push_back(0);
        }

        std::vector<std::pair<std::uint32_t, std::uint32_t>> pair_list;
        pair_list.reserve(pairs);
        for (std::uint32_t i = 0; i < k; ++i)
            for (std::uint32_t j = i + 1; j < k; ++j) pair_list.emplace_back(i, j);

        // Every match seed is a pure function of (round, flat index), so the
        // round-robin parallelizes without changing results.
        const Seed round_root = split_seed(match_root, round);
        std::vector<double> results(round_games);
        parallel_for(round_games, threads, [&](std::size_t f) {
            const auto [i, j] = pair_list[f / per_pair];
            const std::uint64_t q = f % per_pair;
            const Seed s = split_seed(round_root, f);
            const bool i_first = q % 2 == 0;
            const MatchOutcome outcome =
                i_first ? play_match(game, population[i], population[j], s)
                        : play_match(game, population[j], population[i], s);
            results[f] =
                score(outcome, i_first ? Perspective::First : Perspective::Second);
        });
        for (std::uint64_t f = 0; f < round_games; ++f) {
            const auto [i, j] = pair_list[f / per_pair];
            score_sum[i] += results[f];
            score_sum[j] += 1.0 - results[f];
            ++games_count[i];
            ++games_count[j];
        }
        tracker.charge(round_games);
        log.games_played = tracker.games();

        selected = 0;
        double best_avg = -1.0;
        for (std::size_t i = 0; i < population.size(); ++i) {
            const double avg = score_sum[i] / static_cast<double>(games_count[i]);
            if (avg > best_avg) {
                best_avg = avg;
                selected = i;
            }
        }
        log.add("round", {{"k", log_num(k)},
                          {"pairs", log_num(pairs)},
                          {"games", log_num(round_games)}});
        log.add("select", {{"index", log_num(static_cast<std::uint64_t>(selected))},
                           {"mean", log_num(best_avg)}});
        ++round;
        if (k > (1ULL << 30)) break;
        k *= 2;
    }

    const bool too_small = round == 0;
    if (too_small && population.empty())
        population.push_back(make_baseline(game, Seed{draw_rng.next_u64()}));
    finish(log, tracker, too_small);
    return {std::move(population[too_small ? 0 : selected]), std::move(log), too_small};
}

}  // namespace arena::optimizers
