#ifndef NETATTACK_RNG_HPP
#define NETATTACK_RNG_HPP

#include <cstdint>
#include <random>

namespace netattack {

/// All randomness in the engine flows through mt19937_64. Its output sequence
/// is fixed by the standard, so traces are reproducible across toolchains as
/// long as we avoid the implementation-defined std::*_distribution types.
using Rng = std::mt19937_64;

/// Independent streams derived from one user seed (graph construction and
/// attack decisions must not consume the same raw sequence).
enum class Stream : std::uint64_t {
  graph = 0x67726170ULL,
  attack = 0x61747461ULL,
};

inline Rng make_rng(std::uint64_t seed, Stream stream) {
  const auto s = static_cast<std::uint64_t>(stream);
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(s >> 32)};
  return Rng(seq);
}

__extension__ using Uint128 = unsigned __int128;

/// Uniform integer in [0, bound). Lemire's multiply-shift with rejection.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  Uint128 m = static_cast<Uint128>(rng()) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = -bound % bound;
    while (low < threshold) {
      m = static_cast<Uint128>(rng()) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

}  // namespace netattack

#endif  // NETATTACK_RNG_HPP
