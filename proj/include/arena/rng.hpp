#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <span>
#include <utility>

namespace arena {

// 64-bit seed. Equal seeds must give bit-identical simulation traces, so all
// sampling goes through Rng below instead of <random> distributions, whose
// output is implementation-defined.
struct Seed {
    std::uint64_t value = 0;

    friend constexpr bool operator==(Seed, Seed) noexcept = default;
};

// Child seed for stream `index` under `root`. The splitmix64 finalizer is a
// bijection on 64-bit words, so two indices under the same root never map to
// the same child.
constexpr Seed split_seed(Seed root, std::uint64_t index) noexcept {
    std::uint64_t z = root.value + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return Seed{z ^ (z >> 31)};
}

// xoshiro256++ with hand-rolled distributions.
class Rng {
  public:
    explicit Rng(Seed seed) noexcept {
        std::uint64_t x = seed.value;
        for (auto& word : state_) {
            x += 0x9E3779B97F4A7C15ULL;
            std::uint64_t z = x;
            z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
            z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
            word = z ^ (z >> 31);
        }
    }

    std::uint64_t next_u64() noexcept {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform in [0, 1) with 53-bit resolution.
    double next_double() noexcept {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform in [0, bound); bound must be nonzero.
    std::uint32_t next_below(std::uint32_t bound) noexcept {
        return static_cast<std::uint32_t>(
            (static_cast<unsigned __int128>(next_u64()) * bound) >> 64);
    }

    // Standard normal via Box-Muller; the paired draw is cached.
    double next_gaussian() noexcept {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = 1.0 - next_double();  // (0, 1] keeps the log finite
        const double u2 = next_double();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

    // Fisher-Yates.
    template <typename T>
    void shuffle(std::span<T> items) noexcept {
        for (std::size_t i = items.size(); i > 1; --i) {
            const auto j = next_below(static_cast<std::uint32_t>(i));
            std::swap(items[i - 1], items[j]);
        }
    }

  private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
        return (x << k) | (x >> (64 - k));
    }

    std::array<std::uint64_t, 4> state_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace arena
