#pragma once

#include <cstdint>
#include <cstddef>

namespace opincast {

// SplitMix64 finalizer. All randomness in the library is derived by mixing
// a master seed with structural keys (trial index, edge endpoints, ...), so
// any draw is reproducible and independent of evaluation order and of the
// number of worker threads.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Named child stream of a parent seed.
constexpr std::uint64_t substream(std::uint64_t parent, std::uint64_t tag) noexcept {
    return mix64(parent ^ mix64(tag ^ 0x5851f42d4c957f2dULL));
}

// Upper 53 bits to a double in [0,1).
constexpr double to_unit(std::uint64_t bits) noexcept {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

// Sequential stream for ordinary draw sequences.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next_bits() noexcept {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    double uniform() noexcept { return to_unit(next_bits()); }

    // Uniform index in [0, n) via the fixed-point multiply trick.
    std::size_t uniform_index(std::size_t n) noexcept {
        return static_cast<std::size_t>(
            (static_cast<unsigned __int128>(next_bits()) * n) >> 64);
    }

private:
    std::uint64_t state_;
};

// One uniform value per directed edge (u,v) of a single cascade or possible
// world. Keyed, not sequential: the same (u,v) yields the same value no
// matter when or how often it is queried. This is what makes the two-stage
// and the round-based simulator agree pathwise under shared randomness.
class OfferDraws {
public:
    explicit OfferDraws(std::uint64_t cascade_seed) noexcept : seed_(cascade_seed) {}

    double offer(std::uint32_t u, std::uint32_t v) const noexcept {
        const std::uint64_t key = (static_cast<std::uint64_t>(u) << 32) | v;
        return to_unit(mix64(seed_ ^ mix64(key)));
    }

    std::uint64_t seed() const noexcept { return seed_; }

private:
    std::uint64_t seed_;
};

}  // namespace opincast
