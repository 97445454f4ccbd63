#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "arena/core.hpp"
#include "arena/optimizers.hpp"
#include "arena/races.hpp"
#include "arena/strategy_file.hpp"
#include "arena/tournament.hpp"

namespace {

using namespace arena;

// Exit codes: 0 ok, 2 bad flags, 3 file I/O or format, 4 budget too small,
// 5 game-id mismatch between inputs.
constexpr int kExitBadFlags = 2;
constexpr int kExitIo = 3;
constexpr int kExitBudget = 4;
constexpr int kExitGameMismatch = 5;

struct GameMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

unsigned default_threads() {
    if (const char* env = std::getenv("PO_ARENA_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1) return static_cast<unsigned>(v);
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc ? hc : 1;
}

GameId need_game(const std::string& name) {
    const auto game = game_from_name(name);
    if (!game) throw std::invalid_argument("unknown game '" + name + "'");
    return *game;
}

StrategyFile load_for_game(const std::string& path, GameId game) {
    StrategyFile f = load_strategy(path);
    if (f.game != game)
        throw GameMismatch(path + " holds a " + std::string(game_name(f.game)) +
                           " strategy, expected " + std::string(game_name(game)));
    return f;
}

std::string stem_of(const std::string& path) {
    const auto stem = std::filesystem::path(path).stem().string();
    return stem.empty() ? path : stem;
}

const CLI::Validator kGameValidator{
    [](std::string& name) -> std::string {
        return game_from_name(name) ? std::string{}
                                    : "unknown game '" + name + "'";
    },
    "GAME"};

struct OptimizeOpts {
    std::string game;
    std::string method;
    std::optional<std::uint64_t> budget_games;
    std::optional<double> budget_seconds;
    double epsilon = 0.01;
    double delta = 0.05;
    std::uint64_t race_cap = 1'000'000;
    std::uint64_t seed = 1;
    std::string baseline_path;
    std::string out_path;
    std::uint32_t pop_size = 16;
    std::uint32_t games_per_pair = 1;
    std::uint64_t eval_games = 10'000;
    unsigned threads = default_threads();
};

int run_optimize(const OptimizeOpts& opt) {
    if (!opt.budget_games && !opt.budget_seconds) {
        std::fprintf(stderr,
                     "error: optimize needs --budget-games and/or --budget-seconds\n");
        return kExitBadFlags;
    }
    const GameId game = need_game(opt.game);
    const Seed seed{opt.seed};

    ParamVector baseline;
    if (!opt.baseline_path.empty()) {
        baseline = load_for_game(opt.baseline_path, game).to_params();
    } else {
        baseline = optimizers::make_baseline(game, split_seed(seed, 0xBA5E));
    }

    const races::RaceConfig race_cfg{opt.epsilon, opt.delta, opt.race_cap};
    const optimizers::Budget budget{opt.budget_games, opt.budget_seconds};

    optimizers::OptimizeResult result;
    if (opt.method == "naive") {
        result = optimizers::naive_es(game, baseline, budget, race_cfg, seed);
    } else if (opt.method == "iterative") {
        result = optimizers::iterative_es(game, baseline, budget, race_cfg, seed);
    } else if (opt.method == "coevol") {
        result = optimizers::real_coevolution(game, baseline, budget, race_cfg, seed);
    } else if (opt.method == "approx-coevol") {
        result = optimizers::approx_coevolution(game, baseline, budget, race_cfg, seed);
    } else {
        result = optimizers::seed_method(
            game, {opt.pop_size, opt.games_per_pair}, budget, seed, opt.threads);
    }

    StrategyFile out;
    out.game = game;
    out.params = result.best.values;
    out.meta = {{"method", opt.method}, {"seed", std::to_string(opt.seed)}};
    save_strategy(opt.out_path, out);

    std::ofstream log_file(opt.out_path + ".log", std::ios::binary);
    if (!log_file) throw std::runtime_error("cannot write " + opt.out_path + ".log");
    result.log.write(log_file);

    const WinStats stats = evaluate(game, result.best, baseline, opt.eval_games,
                                    split_seed(seed, 0xE7A1), opt.threads);
    std::printf("method=%s game=%s seed=%llu games-used=%llu\n", opt.method.c_str(),
                game_name(game).data(),
                static_cast<unsigned long long>(opt.seed),
                static_cast<unsigned long long>(result.log.games_played));
    std::printf("final-vs-baseline: mean=%.6f stderr=%.6f games=%llu\n", stats.mean,
                stats.std_err, static_cast<unsigned long long>(stats.games));

    if (result.budget_too_small) {
        std::fprintf(stderr, "warning: budget too small for a single comparison\n");
        return kExitBudget;
    }
    return 0;
}

struct TournamentOpts {
    std::string game;
    std::vector<std::string> strategy_paths;
    std::uint64_t games = 1'000;
    std::uint64_t seed = 1;
    std::string format = "text";
    bool dominant = false;
    unsigned threads = default_threads();
};

int run_tournament(const TournamentOpts& opt) {
    const GameId game = need_game(opt.game);
    if (opt.strategy_paths.size() < 2) {
        std::fprintf(stderr, "error: tournament needs at least two --strategy files\n");
        return kExitBadFlags;
    }
    std::vector<ParamVector> strategies;
    std::vector<std::string> labels;
    for (const auto& path : opt.strategy_paths) {
        strategies.push_back(load_for_game(path, game).to_params());
        labels.push_back(stem_of(path));
    }
    const auto table = tournament::round_robin(game, strategies, labels, opt.games,
                                               Seed{opt.seed}, opt.threads);
    const auto format = opt.format == "csv" ? tournament::TableFormat::Csv
                                            : tournament::TableFormat::Text;
    std::fputs(tournament::render_table(table, format).c_str(), stdout);
    if (opt.dominant) {
        const auto best = tournament::dominant_strategy(table);
        std::printf("dominant: %s\n", best ? table.labels[*best].c_str() : "none");
    }
    return 0;
}

struct RaceOpts {
    std::string game;
    std::string path_a;
    std::string path_b;
    double epsilon = 0.01;
    double delta = 0.05;
    std::uint64_t max_games = 1'000'000;
    std::uint64_t seed = 1;
};

int run_race(const RaceOpts& opt) {
    const GameId game = need_game(opt.game);
    const ParamVector a = load_for_game(opt.path_a, game).to_params();
    const ParamVector b = load_for_game(opt.path_b, game).to_params();

    Rng seat_rng(split_seed(Seed{opt.seed}, 2));
    const Seed match_root = split_seed(Seed{opt.seed}, 3);
    std::uint64_t counter = 0;
    const auto sampler = [&]() {
        const Seed s = split_seed(match_root, counter++);
        const bool a_first = seat_rng.next_below(2) == 0;
        const MatchOutcome outcome =
            a_first ? play_match(game, a, b, s) : play_match(game, b, a, s);
        return score(outcome, a_first ? Perspective::First : Perspective::Second);
    };
    const auto result =
        races::paired_race(sampler, {opt.epsilon, opt.delta, opt.max_games});

    const char* winner = result.winner == races::RaceWinner::A   ? "a"
                         : result.winner == races::RaceWinner::B ? "b"
                                                                 : "tie";
    const char* halt = result.halt == races::HaltReason::Separated ? "separated"
                       : result.halt == races::HaltReason::PrecisionReached
                           ? "precision"
                           : "budget";
    std::printf("winner: %s\n", winner);
    std::printf("a: %s mean=%.6f games=%llu\n", stem_of(opt.path_a).c_str(),
                result.mean_a, static_cast<unsigned long long>(result.games_a));
    std::printf("b: %s mean=%.6f games=%llu\n", stem_of(opt.path_b).c_str(),
                result.mean_b, static_cast<unsigned long long>(result.games_b));
    std::printf("halt: %s\n", halt);
    return 0;
}

struct BaselineOpts {
    std::string game;
    std::uint64_t seed = 1;
    std::string out_path;
};

int run_baseline(const BaselineOpts& opt) {
    const GameId game = need_game(opt.game);
    const ParamVector params = optimizers::make_baseline(game, Seed{opt.seed});
    StrategyFile out;
    out.game = game;
    out.params = params.values;
    out.meta = {{"method", "baseline"}, {"seed", std::to_string(opt.seed)}};
    save_strategy(opt.out_path, out);
    std::printf("wrote %s (%zu params)\n", opt.out_path.c_str(), out.params.size());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"po-arena: optimize and compare parametric strategies for "
                 "partially observable two-player games"};
    app.require_subcommand(1);

    OptimizeOpts optimize;
    auto* opt_cmd = app.add_subcommand(
        "optimize", "Run one optimizer and write the resulting strategy");
    opt_cmd->add_option("--game", optimize.game, "Game id")->required()->check(kGameValidator);
    opt_cmd->add_option("--method", optimize.method, "Optimizer")
        ->required()
        ->check(CLI::IsMember({"naive", "iterative", "coevol", "approx-coevol", "seed"}));
    opt_cmd->add_option("--budget-games", optimize.budget_games,
                        "Total game budget (reproducible mode)");
    opt_cmd->add_option("--budget-seconds", optimize.budget_seconds,
                        "Wall-clock budget; results then depend on the machine");
    opt_cmd->add_option("--epsilon", optimize.epsilon, "Race precision cutoff")
        ->capture_default_str();
    opt_cmd->add_option("--delta", optimize.delta, "Race error probability")
        ->capture_default_str();
    opt_cmd->add_option("--race-max-games", optimize.race_cap, "Per-race safety cap")
        ->capture_default_str();
    opt_cmd->add_option("--seed", optimize.seed, "Run seed")->capture_default_str();
    opt_cmd->add_option("--baseline", optimize.baseline_path,
                        "Baseline strategy file (default: generated Gaussian)");
    opt_cmd->add_option("--out", optimize.out_path, "Output strategy file")->required();
    opt_cmd->add_option("--pop-size", optimize.pop_size, "Seed method: population size")
        ->capture_default_str();
    opt_cmd->add_option("--games-per-pair", optimize.games_per_pair,
                        "Seed method: games per pair")
        ->capture_default_str();
    opt_cmd->add_option("--eval-games", optimize.eval_games,
                        "Games for the final report")
        ->capture_default_str();
    opt_cmd->add_option("--threads", optimize.threads, "Worker threads");

    TournamentOpts tourn;
    auto* tourn_cmd =
        app.add_subcommand("tournament", "Round-robin cross table of strategies");
    tourn_cmd->add_option("--game", tourn.game, "Game id")->required()->check(kGameValidator);
    tourn_cmd->add_option("--strategy", tourn.strategy_paths,
                          "Strategy file (repeat at least twice)")
        ->required();
    tourn_cmd->add_option("--games", tourn.games, "Games per pair")->capture_default_str();
    tourn_cmd->add_option("--seed", tourn.seed, "Seed")->capture_default_str();
    tourn_cmd->add_option("--format", tourn.format, "Output format")
        ->check(CLI::IsMember({"text", "csv"}))
        ->capture_default_str();
    tourn_cmd->add_flag("--dominant", tourn.dominant,
                        "Also report the strategy beating all others");
    tourn_cmd->add_option("--threads", tourn.threads, "Worker threads");

    RaceOpts race;
    auto* race_cmd = app.add_subcommand("race", "Race two strategies head to head");
    race_cmd->add_option("--game", race.game, "Game id")->required()->check(kGameValidator);
    race_cmd->add_option("--a", race.path_a, "Challenger strategy file")->required();
    race_cmd->add_option("--b", race.path_b, "Incumbent strategy file")->required();
    race_cmd->add_option("--epsilon", race.epsilon, "Precision cutoff")->capture_default_str();
    race_cmd->add_option("--delta", race.delta, "Error probability")->capture_default_str();
    race_cmd->add_option("--max-games", race.max_games, "Safety cap")->capture_default_str();
    race_cmd->add_option("--seed", race.seed, "Seed")->capture_default_str();

    BaselineOpts baseline;
    auto* base_cmd =
        app.add_subcommand("baseline", "Write a random Gaussian strategy file");
    base_cmd->add_option("--game", baseline.game, "Game id")->required()->check(kGameValidator);
    base_cmd->add_option("--seed", baseline.seed, "Seed")->capture_default_str();
    base_cmd->add_option("--out", baseline.out_path, "Output strategy file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadFlags;
    }

    try {
        if (opt_cmd->parsed()) return run_optimize(optimize);
        if (tourn_cmd->parsed()) return run_tournament(tourn);
        if (race_cmd->parsed()) return run_race(race);
        if (base_cmd->parsed()) return run_baseline(baseline);
    } catch (const GameMismatch& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitGameMismatch;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitBadFlags;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitIo;
    }
    return kExitBadFlags;
}
