#pragma once

// Seeded random test systems. Output is reproducible for a given seed on a
// given standard library.

#include "fermisea/factorization.hpp"
#include "fermisea/thermal.hpp"

#include <random>
#include <vector>

namespace fermisea {

using Rng = std::mt19937_64;

/// N orthonormal orbitals on D sites from the QR factor of a complex Gaussian matrix.
[[nodiscard]] OrbitalSet random_orbitals(Index dim, Index n_occ, Rng &rng);

/// Random N x N unitary (Haar-like, via QR).
[[nodiscard]] CMatrix random_unitary(Index n, Rng &rng);

/// Hermitian matrix with complex Gaussian entries of the given scale.
[[nodiscard]] CMatrix random_hermitian(Index dim, double scale, Rng &rng);

/// Non-empty proper or full subset of {0..dim-1}, sorted, of random size.
[[nodiscard]] std::vector<int> random_sites(int dim, Rng &rng);

/// Spectrum of `length` independent uniform draws on [0,1].
[[nodiscard]] std::vector<double> random_unit_values(std::size_t length, Rng &rng);

} // namespace fermisea
