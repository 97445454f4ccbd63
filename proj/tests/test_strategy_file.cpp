#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include "arena/optimizers.hpp"
#include "arena/strategy_file.hpp"
#include "test_util.hpp"

using namespace arena;

TEST_CASE("render emits the documented layout") {
    StrategyFile f;
    f.game = GameId::Pig;
    f.params = {21.5};
    f.meta = {{"method", "iterative"}, {"seed", "7"}};
    const auto text = render_strategy(f);
    CHECK(text == "po-arena-strategy v1\ngame: pig\nparams: 21.5\n"
                  "meta.method: iterative\nmeta.seed: 7\n");
}

TEST_CASE("render and parse round-trip every game exactly") {
    Rng rng(Seed{91});
    for (GameId g : kAllGames) {
        for (int rep = 0; rep < 20; ++rep) {
            StrategyFile f;
            f.game = g;
            f.params.resize(param_count(g));
            for (auto& p : f.params) p = rng.next_gaussian() * std::pow(10.0, int(rng.next_below(7)) - 3);
            f.meta = {{"note", "round trip"}};
            const auto back = parse_strategy(render_strategy(f));
            CHECK(back.game == g);
            CHECK(back.params == f.params);
            CHECK(back.meta == f.meta);
        }
    }
}

TEST_CASE("parameter text survives extreme magnitudes bit-exactly") {
    Rng rng(Seed{92});
    StrategyFile f;
    f.game = GameId::Morra;
    f.params.resize(100'000);
    for (auto& p : f.params) {
        const int scale = int(rng.next_below(601)) - 300;
        p = (rng.next_double() * 2.0 - 1.0) * std::pow(10.0, scale);
    }
    f.params[0] = 0.0;
    f.params[1] = -0.0;
    f.params[2] = 0.1;  // classic non-representable decimal
    const auto back = parse_strategy(render_strategy(f));
    REQUIRE(back.params.size() == f.params.size());
    for (std::size_t i = 0; i < f.params.size(); ++i) CHECK(back.params[i] == f.params[i]);
}

TEST_CASE("parse rejects malformed files") {
    CHECK_THROWS_AS(parse_strategy("not-a-strategy\n"), std::runtime_error);
    CHECK_THROWS_AS(parse_strategy("po-arena-strategy v1\ngame: pig\n"), std::runtime_error);
    CHECK_THROWS_AS(parse_strategy("po-arena-strategy v1\nparams: 1\n"), std::runtime_error);
    CHECK_THROWS_AS(parse_strategy("po-arena-strategy v1\ngame: tarot\nparams: 1\n"),
                    std::runtime_error);
    CHECK_THROWS_AS(parse_strategy("po-arena-strategy v1\ngame: pig\nparams: 1\njunk\n"),
                    std::runtime_error);
    CHECK_THROWS_AS(parse_strategy("po-arena-strategy v1\ngame: pig\nparams: abc\n"),
                    std::runtime_error);
}

TEST_CASE("load checks the file against the game's arity") {
    const auto dir = std::filesystem::temp_directory_path() / "po-arena-sf-test";
    std::filesystem::create_directories(dir);
    const auto path = dir / "bad.strat";
    {
        std::ofstream out(path);
        out << "po-arena-strategy v1\ngame: morra\nparams: 1 2 3\n";
    }
    CHECK_THROWS_AS(load_strategy(path), std::runtime_error);
    CHECK_THROWS_AS(load_strategy(dir / "missing.strat"), std::runtime_error);

    const auto good = dir / "good.strat";
    StrategyFile f;
    f.game = GameId::GuessWho;
    f.params = {-0.56, -1.58, -0.06, -0.022};
    save_strategy(good, f);
    const auto back = load_strategy(good);
    CHECK(back.params == f.params);
    std::filesystem::remove_all(dir);
}
