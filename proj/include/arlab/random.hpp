#pragma once

#include <cstdint>
#include <random>

#include "arlab/linalg.hpp"

namespace arlab {

// Seeded generator. Every randomized routine takes one of these (or a raw
// seed); there is no wall-clock seeding anywhere.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double normal() { return normal_(engine_); }
    double uniform() { return uniform_(engine_); }
    // Uniform integer in [0, n).
    std::int64_t index(std::int64_t n) {
        return std::uniform_int_distribution<std::int64_t>(0, n - 1)(engine_);
    }

    std::mt19937_64& engine() { return engine_; }

  private:
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
    std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

// iid standard complex Gaussian entries.
Mat ginibre(Rng& rng, Eigen::Index rows, Eigen::Index cols);

// Haar-distributed unitary (QR of a Ginibre matrix with phase fix).
UnitaryMatrix haar_unitary(Rng& rng, Eigen::Index n);

// Hermitian with normalized Gaussian entries, ||.||_op typically O(sqrt n).
Mat random_hermitian(Rng& rng, Eigen::Index n);

// Random rank-r orthogonal projection (range of a Haar isometry).
Mat random_projection(Rng& rng, Eigen::Index n, Eigen::Index r);

// Unit vector.
Vec random_unit_vector(Rng& rng, Eigen::Index n);

}  // namespace arlab
