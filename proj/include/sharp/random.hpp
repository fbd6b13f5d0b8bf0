#pragma once

#include "sharp/configuration.hpp"

#include <cstdint>
#include <random>

namespace sharp {

/// Independent generator for work unit `stream` of a run seeded with `seed`.
inline std::mt19937_64 substream(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

/// Uniform point on S^{dim-1} (normalized Gaussian).
inline Vector random_unit(int ambient_dim, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Vector v(ambient_dim);
  do {
    for (int i = 0; i < ambient_dim; ++i) v(i) = normal(rng);
  } while (v.norm() < 1e-12);
  return v.normalized();
}

} // namespace sharp
