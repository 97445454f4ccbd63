#include "arena/tournament.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

#include "arena/parallel.hpp"

namespace arena::tournament {

namespace {

std::string fmt3(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

std::string cell_text(const WinStats& s) {
    return fmt3(s.mean) + "(+-" + fmt3(s.std_err) + ")";
}

}  // namespace

CrossTable round_robin(GameId game, const std::vector<ParamVector>& strategies,
                       const std::vector<std::string>& labels,
                       std::uint64_t games_per_pair, Seed seed, unsigned threads) {
    const std::size_t n = strategies.size();
    if (n < 2) throw std::invalid_argument("round robin needs at least 2 strategies");
    if (games_per_pair == 0) throw std::invalid_argument("need at least one game per pair");
    if (!labels.empty() && labels.size() != n)
        throw std::invalid_argument("labels must match strategies");
    for (const auto& s : strategies) validate_params(s, game);

    CrossTable table;
    table.labels.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        table.labels[i] = labels.empty() ? "s" + std::to_string(i) : labels[i];

    std::vector<std::pair<std::uint32_t, std::uint32_t>> pair_list;
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j) pair_list.emplace_back(i, j);

    const std::uint64_t total = pair_list.size() * games_per_pair;
    std::vector<double> results(total);  // score from row i's perspective
    parallel_for(total, threads, [&](std::size_t f) {
        const auto [i, j] = pair_list[f / games_per_pair];
        const std::uint64_t q = f % games_per_pair;
        const Seed match_seed = split_seed(split_seed(seed, f / games_per_pair), q);
        const bool i_first = q % 2 == 0;
        const MatchOutcome outcome =
            i_first ? play_match(game, strategies[i], strategies[j], match_seed)
                    : play_match(game, strategies[j], strategies[i], match_seed);
        results[f] = score(outcome, i_first ? Perspective::First : Perspective::Second);
    });

    table.cells.assign(n, std::vector<WinStats>(n));
    for (std::size_t i = 0; i < n; ++i) {
        // Diagonal convention: mirrored self-play is scored a flat half.
        table.cells[i][i] = WinStats{0.0, 0, 0.5, 0.0};
    }
    for (std::size_t p = 0; p < pair_list.size(); ++p) {
        const auto [i, j] = pair_list[p];
        double wins = 0.0;
        for (std::uint64_t q = 0; q < games_per_pair; ++q)
            wins += results[p * games_per_pair + q];
        table.cells[i][j] = WinStats::from_wins(wins, games_per_pair);
        table.cells[j][i] = WinStats::from_wins(
            static_cast<double>(games_per_pair) - wins, games_per_pair);
    }
    return table;
}

std::optional<std::size_t> dominant_strategy(const CrossTable& table) {
    const std::size_t n = table.labels.size();
    std::optional<std::size_t> best;
    double best_min = -1.0;
    for (std::size_t i = 0; i < n; ++i) {
        double row_min = 1.0;
        bool qualifies = true;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            const double m = table.cells[i][j].mean;
            if (m < 0.5) {
                qualifies = false;
                break;
            }
            row_min = std::min(row_min, m);
        }
        if (qualifies && row_min > best_min) {
            best = i;
            best_min = row_min;
        }
    }
    return best;
}

std::string render_table(const CrossTable& table, TableFormat format) {
    const std::size_t n = table.labels.size();
    std::string out;

    if (format == TableFormat::Csv) {
        out += "strategy";
        for (const auto& l : table.labels) out += "," + l;
        out += '\n';
        char buf[32];
        for (std::size_t i = 0; i < n; ++i) {
            out += table.labels[i];
            for (std::size_t j = 0; j < n; ++j) {
                std::snprintf(buf, sizeof buf, ",%.6f", table.cells[i][j].mean);
                out += buf;
            }
            out += '\n';
        }
        return out;
    }

    // Text: one header row of "vs <label>" columns, aligned.
    std::vector<std::vector<std::string>> grid(n + 1);
    grid[0].push_back("strategy");
    for (const auto& l : table.labels) grid[0].push_back("vs " + l);
    for (std::size_t i = 0; i < n; ++i) {
        grid[i + 1].push_back(table.labels[i]);
        for (std::size_t j = 0; j < n; ++j)
            grid[i + 1].push_back(cell_text(table.cells[i][j]));
    }
    std::vector<std::size_t> width(n + 1, 0);
    for (const auto& row : grid)
        for (std::size_t c = 0; c < row.size(); ++c)
            width[c] = std::max(width[c], row[c].size());
    for (const auto& row : grid) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            out += row[c];
            if (c + 1 < row.size())
                out.append(width[c] - row[c].size() + 2, ' ');
        }
        out += '\n';
    }
    return out;
}

}  // namespace arena::tournament
