#include "arena/games/nim.hpp"

#include <limits>
#include <stdexcept>

namespace arena::games::nim {

HeapState state_from_index(std::size_t index) noexcept {
    HeapState s;
    s.heaps[0] = static_cast<std::uint8_t>(index % 2);
    index /= 2;
    s.heaps[1] = static_cast<std::uint8_t>(index % 4);
    index /= 4;
    s.heaps[2] = static_cast<std::uint8_t>(index % 6);
    index /= 6;
    s.heaps[3] = static_cast<std::uint8_t>(index % 8);
    return s;
}

std::array<Value, kNonTerminalStates> exact_values() {
    std::array<Value, kNonTerminalStates> values{};
    // Indices are monotone in each heap load, so every successor of state i
    // has a smaller index; a single ascending sweep is a full retrograde pass.
    for (std::size_t idx = 1; idx <= kNonTerminalStates; ++idx) {
        const HeapState s = state_from_index(idx);
        bool win = false;
        for (int h = 0; h < 4 && !win; ++h) {
            for (int take = 1; take <= s.heaps[h]; ++take) {
                HeapState next = s;
                next.heaps[h] = static_cast<std::uint8_t>(next.heaps[h] - take);
                const std::size_t ni = state_index(next);
                // Moving to the empty board takes the last object: a loss for
                // the mover, never a winning move.
                if (ni != 0 && values[ni - 1] == Value::LossToMove) {
                    win = true;
                    break;
                }
            }
        }
        values[idx - 1] = win ? Value::WinToMove : Value::LossToMove;
    }
    return values;
}

Move choose_move(std::span<const double> state_values, HeapState s) noexcept {
    Move best{};
    double best_value = std::numeric_limits<double>::infinity();
    std::size_t best_index = std::numeric_limits<std::size_t>::max();
    bool found = false;
    for (int h = 0; h < 4; ++h) {
        for (int take = 1; take <= s.heaps[h]; ++take) {
            HeapState next = s;
            next.heaps[h] = static_cast<std::uint8_t>(next.heaps[h] - take);
            const std::size_t ni = state_index(next);
            const double value = ni == 0 ? std::numeric_limits<double>::infinity()
                                         : state_values[ni - 1];
            if (!found || value < best_value ||
                (value == best_value && ni < best_index)) {
                best = {h, take};
                best_value = value;
                best_index = ni;
                found = true;
            }
        }
    }
    return best;
}

MatchOutcome play(std::span<const double> first, std::span<const double> second,
                  HeapState start) {
    if (first.size() != kNonTerminalStates || second.size() != kNonTerminalStates)
        throw std::invalid_argument("nim takes 383 state values");
    if (start.empty()) throw std::invalid_argument("nim start state is terminal");
    HeapState s = start;
    std::uint64_t moves = 0;
    for (int mover = 0;; mover ^= 1) {
        const Move m = choose_move(mover == 0 ? first : second, s);
        s.heaps[m.heap] = static_cast<std::uint8_t>(s.heaps[m.heap] - m.take);
        ++moves;
        if (s.empty()) {
            // The mover took the last object and loses.
            return {mover == 0 ? MatchResult::WinSecond : MatchResult::WinFirst,
                    moves};
        }
    }
}

}  // namespace arena::games::nim
