#pragma once

#include <cstdint>
#include <random>

#include "sbgeo/disc.hpp"

namespace sbgeo {

using Rng = std::mt19937_64;

/// Uniform double in [0, 1) from the top 53 bits; portable across standard
/// library implementations, unlike std::uniform_real_distribution.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform (area measure) sample of the disc of radius r.
Complex random_disc_point(Rng& rng, double r);

/// Uniform angle sample on the unit circle.
Complex random_unimodular(Rng& rng);

}  // namespace sbgeo
