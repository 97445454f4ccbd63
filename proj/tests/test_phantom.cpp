#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "arena/core.hpp"
#include "arena/games/phantom_ttt.hpp"
#include "arena/optimizers.hpp"
#include "test_util.hpp"

using namespace arena;
using namespace arena::games;

namespace {

std::vector<double> prio(std::initializer_list<int> favored) {
    // favored cells get descending high scores, the rest stay at zero
    std::vector<double> p(9, 0.0);
    double v = 100.0;
    for (int cell : favored) p[cell] = v--;
    return p;
}

}  // namespace

TEST_CASE("an unobstructed player places in strict priority order") {
    // first seat races for the top row; second seat stays on the bottom row
    const auto first = prio({0, 1, 2, 3, 4});
    const auto second = prio({8, 7, 6});
    for (std::uint64_t i = 0; i < 200; ++i) {
        const auto o = phantom_ttt::play(first, second, split_seed(Seed{51}, i));
        CHECK(o.result == MatchResult::WinFirst);
        CHECK(o.moves_played == 5);  // placements 0,1,2 on turns 0,2,4
    }
}

TEST_CASE("board never holds more than nine stones") {
    Rng rng(Seed{52});
    std::vector<double> a(9), b(9);
    for (std::uint64_t i = 0; i < 2'000; ++i) {
        for (auto& v : a) v = rng.next_gaussian();
        for (auto& v : b) v = rng.next_gaussian();
        const auto o = phantom_ttt::play(a, b, split_seed(Seed{53}, i));
        CHECK(o.moves_played <= 9);
        if (o.result == MatchResult::Draw) CHECK(o.moves_played == 9);
    }
}

TEST_CASE("identical priorities are balanced under seat alternation") {
    const auto p = optimizers::make_baseline(GameId::PhantomTtt, Seed{54});
    const auto stats = evaluate(GameId::PhantomTtt, p, p, 10'000, Seed{54}, 2);
    CHECK(std::abs(stats.mean - 0.5) < 0.015);
}

TEST_CASE("matches are deterministic per seed") {
    const auto a = prio({4, 0, 8, 2, 6});
    const auto b = prio({1, 3, 5, 7});
    for (std::uint64_t i = 0; i < 50; ++i) {
        const Seed s = split_seed(Seed{55}, i);
        const auto o1 = phantom_ttt::play(a, b, s);
        const auto o2 = phantom_ttt::play(a, b, s);
        CHECK(o1.result == o2.result);
        CHECK(o1.moves_played == o2.moves_played);
    }
}

TEST_CASE("arity is checked") {
    CHECK_THROWS_AS(phantom_ttt::play(std::vector<double>(8, 0.0),
                                      std::vector<double>(9, 0.0), Seed{1}),
                    std::invalid_argument);
}
