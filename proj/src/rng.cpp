#include "aircomp/rng.hpp"

namespace aircomp {

std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * UINT64_C(0xBF58476D1CE4E5B9);
  z = (z ^ (z >> 27)) * UINT64_C(0x94D049BB133111EB);
  return z ^ (z >> 31);
}

std::uint64_t substream_seed(std::uint64_t master, std::uint64_t index) noexcept {
  constexpr std::uint64_t kGamma = UINT64_C(0x9E3779B97F4A7C15);
  return mix64(mix64(master + kGamma) + (index + 1) * kGamma);
}

Engine make_engine(std::uint64_t master, std::uint64_t index) { return Engine(substream_seed(master, index)); }

}  // namespace aircomp
