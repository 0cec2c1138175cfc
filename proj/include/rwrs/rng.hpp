#pragma once

#include <cstdint>
#include <random>

namespace rwrs {

using Rng = std::mt19937_64;

// Independent stream for (root seed, stream index); trials use their index.
inline Rng make_rng(uint64_t root_seed, uint64_t stream = 0) {
  std::seed_seq seq{static_cast<uint32_t>(root_seed), static_cast<uint32_t>(root_seed >> 32),
                    static_cast<uint32_t>(stream), static_cast<uint32_t>(stream >> 32)};
  return Rng(seq);
}

}  // namespace rwrs
