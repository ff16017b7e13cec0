#ifndef AIRCOMP_RNG_HPP
#define AIRCOMP_RNG_HPP

#include <cstdint>
#include <random>

namespace aircomp {

using Engine = std::mt19937_64;

/// SplitMix64 finalizer; a bijective 64-bit mixer.
std::uint64_t mix64(std::uint64_t z) noexcept;

/// Seed for substream `index` of `master`. Counter-based: the value depends
/// only on (master, index), never on how many streams were drawn before.
std::uint64_t substream_seed(std::uint64_t master, std::uint64_t index) noexcept;

/// Engine positioned at the start of substream `index` of `master`.
Engine make_engine(std::uint64_t master, std::uint64_t index);

}  // namespace aircomp

#endif  // AIRCOMP_RNG_HPP
