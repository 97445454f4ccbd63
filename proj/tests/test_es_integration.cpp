// Long-running end-to-end optimizer checks on the real card games: a fresh
// Gaussian start must rediscover the descending reinsertion order and clear
// a 0.60 winning rate against uniform-random card ordering.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arena/optimizers.hpp"
#include "test_util.hpp"

using namespace arena;
using namespace arena::optimizers;

namespace {
const races::RaceConfig kCardRace{0.05, 0.05, 20'000};
}

TEST_CASE("naive ES learns batawaf card ordering from scratch") {
    const auto base = make_baseline(GameId::Batawaf, split_seed(Seed{1}, 0xBA5E));
    const auto r = naive_es(GameId::Batawaf, base, {200'000, {}}, kCardRace, Seed{1});
    CHECK(!r.budget_too_small);
    const auto vs_uniform = evaluate(GameId::Batawaf, r.best,
                                     testutil::random_order(GameId::Batawaf), 10'000,
                                     Seed{901}, 2);
    CHECK(vs_uniform.mean >= 0.60);
    // games accounting holds on a real run too
    CHECK(r.log.games_played == testutil::sum_race_games(r.log));
}

TEST_CASE("iterative ES learns war card ordering from scratch") {
    const auto base = make_baseline(GameId::War, split_seed(Seed{2}, 0xBA5E));
    const auto r = iterative_es(GameId::War, base, {200'000, {}}, kCardRace, Seed{2});
    CHECK(!r.budget_too_small);
    const auto vs_uniform = evaluate(GameId::War, r.best,
                                     testutil::random_order(GameId::War), 10'000,
                                     Seed{902}, 2);
    CHECK(vs_uniform.mean >= 0.60);
    // the learned weights favor reinsertion in descending order
    CHECK(r.best.values[2] > r.best.values[0]);
    CHECK(r.best.values[2] > r.best.values[1]);
}
