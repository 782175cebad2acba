#pragma once

#include <cstdint>
#include <string>

#include "qops/spectral.hpp"

// Seeded property suite over random spectral effects. Each sample draws its
// own generator from (seed, index), so results are independent of schedule
// and the parallel and serial drivers agree bit-for-bit.

namespace qops {

struct SpectralVerifyResult {
    int samples = 0;
    int violations = 0;
    std::string first_failure;  // empty when clean
};

// One sample: generates effects for (seed, index) and checks lattice,
// involution, pasting, modularity, projection-closure, sharpness and
// order-comparison properties. Returns an empty string or a description.
std::string spectral_verify_one(int d, std::uint64_t seed, int index);

SpectralVerifyResult spectral_verify(int samples, int d, std::uint64_t seed,
                                     bool parallel = true);

}  // namespace qops
