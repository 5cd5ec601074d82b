// Seeded randomness with a fully specified bit stream: mt19937_64 plus a
// hand-rolled Box-Muller transform, so identical seeds give bit-identical
// samples on every platform (std::normal_distribution is not pinned down by
// the standard).

#pragma once

#include <cstdint>
#include <random>

#include "lugeo/types.hpp"

namespace lugeo {

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    // uniform double in [0, 1)
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double gaussian();

    // re and im independent standard normals
    cxd complex_gaussian() {
        const double re = gaussian();
        const double im = gaussian();
        return {re, im};
    }

    std::uint64_t raw() { return gen_(); }

  private:
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

// Haar-distributed unitary via QR of a complex Ginibre matrix with the
// R-diagonal phase correction.
Mat random_unitary(int n, Rng& rng);

// Haar unitary rescaled to unit determinant.
Mat random_special_unitary(int n, Rng& rng);

}  // namespace lugeo
