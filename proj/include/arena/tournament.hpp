#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arena/core.hpp"

namespace arena::tournament {

// Square winning-rate matrix: cells[i][j] is row i's stats against column j.
// Both (i, j) and (j, i) come from the same matches, so
// cells[i][j].mean + cells[j][i].mean == 1 exactly; the diagonal is fixed at
// mean 0.5 with zero error by convention.
struct CrossTable {
    std::vector<std::string> labels;
    std::vector<std::vector<WinStats>> cells;
};

// games_per_pair seat-alternated matches per unordered pair, with child
// seeds derived from (seed, pair, match). Pairs may run concurrently; the
// table is assembled in pair order regardless of thread count.
CrossTable round_robin(GameId, const std::vector<ParamVector>& strategies,
                       const std::vector<std::string>& labels,
                       std::uint64_t games_per_pair, Seed, unsigned threads = 1);

// Row whose every off-diagonal mean is at least 0.5; when several qualify,
// the one with the largest minimum off-diagonal mean.
std::optional<std::size_t> dominant_strategy(const CrossTable&);

enum class TableFormat : std::uint8_t { Text, Csv };

// Text: aligned "mean(+-stderr)" cells at 3 significant digits. Csv: header
// row "strategy,<label>,...", mean per cell with 6 decimals, LF endings.
// Both are byte-deterministic for a given table.
std::string render_table(const CrossTable&, TableFormat);

}  // namespace arena::tournament
