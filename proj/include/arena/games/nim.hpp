#pragma once

#include <array>
#include <cstdint>
#include <span>

#include "arena/core.hpp"

namespace arena::games::nim {

// Heap capacities of the standard position.
inline constexpr std::array<std::uint8_t, 4> kHeapFull{1, 3, 5, 7};
inline constexpr std::size_t kNonTerminalStates = 383;

struct HeapState {
    std::array<std::uint8_t, 4> heaps{};

    bool empty() const noexcept {
        return heaps[0] == 0 && heaps[1] == 0 && heaps[2] == 0 && heaps[3] == 0;
    }
    friend bool operator==(const HeapState&, const HeapState&) = default;
};

inline constexpr HeapState kStartState{{1, 3, 5, 7}};

// Mixed-radix index with radixes (2, 4, 6, 8): index 0 is the terminal empty
// state, 1..383 are the non-terminal states. A value table stores state s at
// slot state_index(s) - 1.
constexpr std::size_t state_index(HeapState s) noexcept {
    return s.heaps[0] + 2u * s.heaps[1] + 8u * s.heaps[2] + 48u * s.heaps[3];
}
HeapState state_from_index(std::size_t index) noexcept;

enum class Value : std::uint8_t { LossToMove, WinToMove };

// Retrograde solution under the misere convention: the player who removes
// the last object loses, so the player facing the empty board has won.
std::array<Value, kNonTerminalStates> exact_values();

struct Move {
    int heap = 0;
    int take = 0;
};

// Picks the legal move whose successor carries the lowest table value, ties
// broken by the smaller successor index. Emptying the board means taking the
// last object, so the terminal successor ranks below every table value and
// is chosen only when forced.
Move choose_move(std::span<const double> state_values, HeapState) noexcept;

// Alternating perfect-information play between two value tables; no
// randomness is involved, so the outcome depends only on the inputs.
MatchOutcome play(std::span<const double> first, std::span<const double> second,
                  HeapState start = kStartState);

}  // namespace arena::games::nim
