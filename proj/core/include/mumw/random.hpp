#pragma once

#include <cstdint>
#include <random>

#include "mumw/linalg.hpp"

namespace mumw {

using Rng = std::mt19937_64;

/// Independent generator for stream `stream` of a run seeded with `seed`.
/// Workers that own distinct streams produce results independent of scheduling.
Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0);

/// Haar-random unit vector in C^d (normalized complex Gaussian).
ComplexVector haar_random_vector(int d, Rng& rng);

/// Haar-random rank-1 projector |v><v|.
ComplexMatrix haar_random_projector(int d, Rng& rng);

/// Haar-random real orthogonal n x n matrix (QR of a Gaussian matrix with sign fix).
RealMatrix haar_random_orthogonal(int n, Rng& rng);

/// Random Hermitian d x d matrix with Gaussian entries.
ComplexMatrix random_hermitian(int d, Rng& rng);

/// Random complex d x d matrix with Gaussian entries.
ComplexMatrix random_complex(int d, Rng& rng);

}  // namespace mumw
