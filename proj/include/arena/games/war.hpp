#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "arena/core.hpp"
#include "arena/rng.hpp"

namespace arena::games::war {

enum class Variant : std::uint8_t { War, Batawaf };

// War plays a 52-card deck (13 ranks x 4 copies), Batawaf a 36-card deck
// (6 ranks x 6 copies).
inline constexpr int rank_count(Variant v) noexcept {
    return v == Variant::War ? 13 : 6;
}
inline constexpr int copies_per_rank(Variant v) noexcept {
    return v == Variant::War ? 4 : 6;
}
inline constexpr int deck_size(Variant v) noexcept {
    return rank_count(v) * copies_per_rank(v);
}

inline constexpr std::uint64_t kMoveCap = 1'000'000;

// Controls the order in which a batch of k won cards re-enters the bottom of
// the winner's deck. The batch is first arranged ascending, then permuted by
// pi o sigma where sigma is uniform / identity / reversal with probabilities
// softmax(uniform_w, identity_w, reverse_w), and pi is a fixed pseudo-random
// permutation keyed on the optional fourth parameter (identity when absent).
// Vector layout: [uniform_w, identity_w, reverse_w, shuffle_seed?].
struct OrderParams {
    double uniform_w = 0.0;
    double identity_w = 0.0;
    double reverse_w = 0.0;
    std::optional<double> shuffle_seed;
};

OrderParams params_from_vector(std::span<const double> values);

// Extreme weight settings for the three pure orderings.
OrderParams descending_order();
OrderParams ascending_order();
OrderParams random_order();

// Writes the permutation applied to the ascending arrangement of k won
// cards into out (out.size() == k). out[i] is the index into the ascending
// arrangement that lands at position i.
void order_won_cards(const OrderParams&, std::uint32_t k, Rng&,
                     std::span<std::uint32_t> out);
std::vector<std::uint32_t> order_won_cards(const OrderParams&, std::uint32_t k, Rng&);

// Snapshot handed to an optional per-step trace callback.
struct TraceState {
    std::vector<std::uint8_t> deck_first;
    std::vector<std::uint8_t> deck_second;
    std::vector<std::uint8_t> table_pile;
    std::uint64_t moves = 0;
};
using TraceFn = std::function<void(const TraceState&)>;

// Full match: random equal deal, tricks with the war tie procedure, winner
// re-inserting cards per their OrderParams. Draw after kMoveCap face-up
// comparisons. A player who cannot supply the two cards a war round requires
// loses on the spot; if both run dry in the same round the match is a draw.
MatchOutcome play(Variant, const OrderParams& first, const OrderParams& second,
                  Seed, const TraceFn& trace = {});

}  // namespace arena::games::war
