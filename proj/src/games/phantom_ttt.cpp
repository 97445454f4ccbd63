#include "arena/games/phantom_ttt.hpp"

#include <array>
#include <stdexcept>

namespace arena::games::phantom_ttt {

namespace {

constexpr std::array<std::array<int, 3>, 8> kLines{{
    {0, 1, 2}, {3, 4, 5}, {6, 7, 8},  // rows
    {0, 3, 6}, {1, 4, 7}, {2, 5, 8},  // columns
    {0, 4, 8}, {2, 4, 6},             // diagonals
}};

bool has_line(std::uint32_t stones) noexcept {
    for (const auto& line : kLines) {
        const std::uint32_t mask =
            (1u << line[0]) | (1u << line[1]) | (1u << line[2]);
        if ((stones & mask) == mask) return true;
    }
    return false;
}

}  // namespace

MatchOutcome play(std::span<const double> priorities_first,
                  std::span<const double> priorities_second, Seed seed) {
    if (priorities_first.size() != kCells || priorities_second.size() != kCells)
        throw std::invalid_argument("phantom tic-tac-toe takes 9 priorities per seat");
    Rng rng(seed);

    std::array<std::uint8_t, kCells> order;
    for (std::size_t i = 0; i < kCells; ++i) order[i] = static_cast<std::uint8_t>(i);
    rng.shuffle(std::span<std::uint8_t>(order));
    std::array<std::uint8_t, kCells> slot_of;  // cell -> position in the order
    for (std::size_t i = 0; i < kCells; ++i) slot_of[order[i]] = static_cast<std::uint8_t>(i);

    int board[kCells];
    for (auto& b : board) b = -1;
    std::uint32_t stones[2] = {0, 0};

    for (std::uint64_t turn = 0; turn < kCells; ++turn) {
        const int mover = static_cast<int>(turn % 2);
        const auto& prio = mover == 0 ? priorities_first : priorities_second;

        int nominated = -1;
        for (std::size_t cell = 0; cell < kCells; ++cell) {
            if (stones[mover] & (1u << cell)) continue;
            if (nominated < 0 || prio[cell] > prio[nominated]) nominated = static_cast<int>(cell);
        }

        int placed = nominated;
        std::size_t slot = slot_of[placed];
        while (board[placed] != -1) {
            slot = (slot + 1) % kCells;
            placed = order[slot];
        }

        board[placed] = mover;
        stones[mover] |= 1u << placed;
        if (has_line(stones[mover]))
            return {mover == 0 ? MatchResult::WinFirst : MatchResult::WinSecond,
                    turn + 1};
    }
    return {MatchResult::Draw, kCells};
}

}  // namespace arena::games::phantom_ttt
