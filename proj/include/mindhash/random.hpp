#pragma once

#include <cstdint>
#include <random>

namespace mindhash {

using Rng = std::mt19937_64;

// Independent stream for (seed, index); results do not depend on evaluation order.
inline Rng make_stream(std::uint64_t seed, std::uint64_t index = 0) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

}  // namespace mindhash
