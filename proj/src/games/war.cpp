#include "arena/games/war.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace arena::games::war {

namespace {

constexpr std::uint32_t kMaxDeck = 52;

// Ring buffer: cards leave from the top (front) and won cards return to the
// bottom (back).
class DeckRing {
  public:
    bool empty() const noexcept { return len_ == 0; }
    std::uint32_t size() const noexcept { return len_; }

    std::uint8_t pop_top() noexcept {
        const std::uint8_t c = buf_[head_];
        head_ = (head_ + 1) % kMaxDeck;
        --len_;
        return c;
    }

    void push_bottom(std::uint8_t c) noexcept {
        buf_[(head_ + len_) % kMaxDeck] = c;
        ++len_;
    }

    std::vector<std::uint8_t> snapshot() const {
        std::vector<std::uint8_t> out(len_);
        for (std::uint32_t i = 0; i < len_; ++i) out[i] = buf_[(head_ + i) % kMaxDeck];
        return out;
    }

  private:
    std::array<std::uint8_t, kMaxDeck> buf_{};
    std::uint32_t head_ = 0;
    std::uint32_t len_ = 0;
};

std::uint64_t shuffle_key(double d) noexcept {
    // floor(d * 2^32) reduced mod 2^64; exp() overflow maps to a fixed key.
    const double scaled = std::floor(d * 4294967296.0);
    if (!std::isfinite(scaled)) return ~0ULL;
    return static_cast<std::uint64_t>(std::fmod(scaled, 18446744073709551616.0));
}

// sigma: uniform / identity / reversal, drawn with stable softmax weights.
void draw_sigma(const OrderParams& p, std::uint32_t k, Rng& rng,
                std::span<std::uint32_t> sigma) {
    for (std::uint32_t i = 0; i < k; ++i) sigma[i] = i;
    const double m = std::max({p.uniform_w, p.identity_w, p.reverse_w});
    const double wa = std::exp(p.uniform_w - m);
    const double wb = std::exp(p.identity_w - m);
    const double wc = std::exp(p.reverse_w - m);
    const double u = rng.next_double() * (wa + wb + wc);
    if (u < wa) {
        rng.shuffle(sigma);
    } else if (u < wa + wb) {
        // identity
    } else {
        std::reverse(sigma.begin(), sigma.end());
    }
}

}  // namespace

OrderParams params_from_vector(std::span<const double> values) {
    if (values.size() != 3 && values.size() != 4)
        throw std::invalid_argument("card ordering takes 3 or 4 parameters");
    OrderParams p;
    p.uniform_w = values[0];
    p.identity_w = values[1];
    p.reverse_w = values[2];
    if (values.size() == 4) p.shuffle_seed = values[3];
    return p;
}

OrderParams descending_order() { return {-20.0, -20.0, 20.0, {}}; }
OrderParams ascending_order() { return {-20.0, 20.0, -20.0, {}}; }
OrderParams random_order() { return {20.0, -20.0, -20.0, {}}; }

void order_won_cards(const OrderParams& p, std::uint32_t k, Rng& rng,
                     std::span<std::uint32_t> out) {
    draw_sigma(p, k, rng, out);
    if (!p.shuffle_seed) return;
    // pi is a fixed permutation per (seed parameter, k); it never consumes
    // match randomness.
    std::array<std::uint32_t, kMaxDeck> pi;
    for (std::uint32_t i = 0; i < k; ++i) pi[i] = i;
    Rng perm_rng(split_seed(Seed{shuffle_key(std::exp(*p.shuffle_seed))}, k));
    perm_rng.shuffle(std::span<std::uint32_t>(pi.data(), k));
    for (std::uint32_t i = 0; i < k; ++i) out[i] = pi[out[i]];
}

std::vector<std::uint32_t> order_won_cards(const OrderParams& p, std::uint32_t k,
                                           Rng& rng) {
    std::vector<std::uint32_t> out(k);
    order_won_cards(p, k, rng, out);
    return out;
}

MatchOutcome play(Variant variant, const OrderParams& first,
                  const OrderParams& second, Seed seed, const TraceFn& trace) {
    const int ranks = rank_count(variant);
    const int total = deck_size(variant);
    Rng rng(seed);

    std::array<std::uint8_t, kMaxDeck> cards;
    for (int i = 0; i < total; ++i) cards[i] = static_cast<std::uint8_t>(1 + i % ranks);
    rng.shuffle(std::span<std::uint8_t>(cards.data(), total));

    DeckRing deck_first, deck_second;
    for (int i = 0; i < total / 2; ++i) deck_first.push_bottom(cards[i]);
    for (int i = total / 2; i < total; ++i) deck_second.push_bottom(cards[i]);

    std::array<std::uint8_t, kMaxDeck> table;
    std::uint32_t table_len = 0;
    std::uint64_t moves = 0;

    const auto notify = [&] {
        if (!trace) return;
        TraceState s;
        s.deck_first = deck_first.snapshot();
        s.deck_second = deck_second.snapshot();
        s.table_pile.assign(table.begin(), table.begin() + table_len);
        s.moves = moves;
        trace(s);
    };

    for (;;) {
        if (deck_first.empty()) return {MatchResult::WinSecond, moves};
        if (deck_second.empty()) return {MatchResult::WinFirst, moves};
        if (moves >= kMoveCap) return {MatchResult::Draw, moves};
        ++moves;

        std::uint8_t c1 = deck_first.pop_top();
        std::uint8_t c2 = deck_second.pop_top();
        table[table_len++] = c1;
        table[table_len++] = c2;
        notify();

        while (c1 == c2) {
            const bool first_ok = deck_first.size() >= 2;
            const bool second_ok = deck_second.size() >= 2;
            if (!first_ok && !second_ok) return {MatchResult::Draw, moves};
            if (!first_ok) return {MatchResult::WinSecond, moves};
            if (!second_ok) return {MatchResult::WinFirst, moves};
            if (moves >= kMoveCap) return {MatchResult::Draw, moves};
            ++moves;
            table[table_len++] = deck_first.pop_top();   // face down
            table[table_len++] = deck_second.pop_top();  // face down
            c1 = deck_first.pop_top();                   // face up
            c2 = deck_second.pop_top();
            table[table_len++] = c1;
            table[table_len++] = c2;
            notify();
        }

        // Winner arranges the pile ascending, then applies their permutation
        // and slides the batch under their deck.
        DeckRing& winner_deck = c1 > c2 ? deck_first : deck_second;
        const OrderParams& winner_params = c1 > c2 ? first : second;

        std::array<std::uint32_t, kMaxDeck + 1> rank_hist{};
        for (std::uint32_t i = 0; i < table_len; ++i) ++rank_hist[table[i]];
        std::array<std::uint8_t, kMaxDeck> ascending;
        std::uint32_t n = 0;
        for (int r = 1; r <= ranks; ++r)
            for (std::uint32_t c = 0; c < rank_hist[r]; ++c)
                ascending[n++] = static_cast<std::uint8_t>(r);

        std::array<std::uint32_t, kMaxDeck> perm;
        order_won_cards(winner_params, table_len, rng,
                        std::span<std::uint32_t>(perm.data(), table_len));
        for (std::uint32_t i = 0; i < table_len; ++i)
            winner_deck.push_bottom(ascending[perm[i]]);
        table_len = 0;
        notify();
    }
}

}  // namespace arena::games::war
