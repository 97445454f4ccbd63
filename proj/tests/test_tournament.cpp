#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "arena/tournament.hpp"
#include "test_util.hpp"

using namespace arena;
using namespace arena::tournament;
using testutil::vec;

namespace {

CrossTable table_from_means(const std::vector<std::vector<double>>& means) {
    CrossTable t;
    const std::size_t n = means.size();
    for (std::size_t i = 0; i < n; ++i) t.labels.push_back("s" + std::to_string(i));
    t.cells.assign(n, std::vector<WinStats>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            t.cells[i][j] = WinStats{0, 0, means[i][j], i == j ? 0.0 : 0.01};
    return t;
}

}  // namespace

TEST_CASE("round robin produces an exactly antisymmetric table") {
    std::vector<ParamVector> strategies{
        vec(GameId::Logistic, {0.0}), vec(GameId::Logistic, {0.5}),
        vec(GameId::Logistic, {1.0})};
    // power-of-two games keep the means exactly representable
    const auto t = round_robin(GameId::Logistic, strategies, {}, 1'024, Seed{81}, 2);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(t.cells[i][i].mean == 0.5);
        CHECK(t.cells[i][i].std_err == 0.0);
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(t.cells[i][j].mean + t.cells[j][i].mean == 1.0);
    }
    CHECK(t.labels[0] == "s0");
}

TEST_CASE("identical strategies land near one half") {
    std::vector<ParamVector> strategies{vec(GameId::Logistic, {0.3}),
                                        vec(GameId::Logistic, {0.3})};
    const auto t = round_robin(GameId::Logistic, strategies, {"a", "b"}, 10'000, Seed{82});
    CHECK(std::abs(t.cells[0][1].mean - 0.5) < 3.0 * t.cells[0][1].std_err + 1e-9);
}

TEST_CASE("round robin is thread-count invariant") {
    std::vector<ParamVector> strategies{vec(GameId::Logistic, {0.0}),
                                        vec(GameId::Logistic, {0.7})};
    const auto t1 = round_robin(GameId::Logistic, strategies, {}, 2'000, Seed{83}, 1);
    const auto t3 = round_robin(GameId::Logistic, strategies, {}, 2'000, Seed{83}, 3);
    CHECK(render_table(t1, TableFormat::Csv) == render_table(t3, TableFormat::Csv));
}

TEST_CASE("round robin validates its inputs") {
    std::vector<ParamVector> one{vec(GameId::Logistic, {0.0})};
    CHECK_THROWS_AS(round_robin(GameId::Logistic, one, {}, 10, Seed{1}),
                    std::invalid_argument);
}

TEST_CASE("dominant strategy: clear winner") {
    const auto t = table_from_means({{0.5, 0.7}, {0.3, 0.5}});
    CHECK(dominant_strategy(t) == 0);
}

TEST_CASE("dominant strategy: none on a cycle") {
    const auto t = table_from_means(
        {{0.5, 0.9, 0.1}, {0.1, 0.5, 0.9}, {0.9, 0.1, 0.5}});
    CHECK(!dominant_strategy(t).has_value());
}

TEST_CASE("dominant strategy: several qualifiers ranked by worst cell") {
    const auto t = table_from_means(
        {{0.5, 0.6, 0.8}, {0.55, 0.5, 0.9}, {0.2, 0.1, 0.5}});
    // row 0 min 0.6, row 1 min 0.55
    CHECK(dominant_strategy(t) == 0);
}

TEST_CASE("text rendering uses three significant digits") {
    CrossTable t;
    t.labels = {"only"};
    t.cells = {{WinStats{0, 0, 0.5, 0.0}}};
    CHECK(render_table(t, TableFormat::Text).find("0.5(+-0)") != std::string::npos);

    const auto wide = table_from_means({{0.5, 0.6884}, {0.3116, 0.5}});
    auto text = render_table(wide, TableFormat::Text);
    CHECK(text.find("0.688(+-0.01)") != std::string::npos);
}

TEST_CASE("csv renders six decimals and round-trips means") {
    const auto t = table_from_means({{0.5, 0.68871239}, {0.31128761, 0.5}});
    const auto csv = render_table(t, TableFormat::Csv);
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line == "strategy,s0,s1");
    std::getline(in, line);
    CHECK(line == "s0,0.500000,0.688712");
    // parse back
    const auto comma = line.rfind(',');
    CHECK(std::stod(line.substr(comma + 1)) == doctest::Approx(0.688712).epsilon(1e-9));
}
