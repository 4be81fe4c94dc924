#pragma once

#include <cstdint>
#include <random>

#include "indukt/types.hpp"

namespace indukt {

/// Kronecker product with row-major pairing: entry ((i1,i2),(j1,j2)) at
/// (i1*rows(b)+i2, j1*cols(b)+j2).
Matrix kron(const Matrix& a, const Matrix& b);

double max_abs(const Matrix& m);

/// Orthonormal basis of the nullspace of m; columns of the result. Singular
/// values below rel_tol times the largest count as zero.
Matrix nullspace(const Matrix& m, double rel_tol);

/// Numerical rank with the same thresholding convention.
int numerical_rank(const Matrix& m, double rel_tol);

/// The unitary polar factor U of m = U P (via SVD).
Matrix polar_unitary(const Matrix& m);

/// Deterministic uniform double in [0, 1); avoids std::*_distribution so the
/// stream is identical across standard libraries.
double uniform01(std::mt19937_64& rng);
/// Deterministic standard complex Gaussian (Box-Muller over uniform01).
Cplx gaussian(std::mt19937_64& rng);

Vector random_vector(std::mt19937_64& rng, int n);
Matrix random_matrix(std::mt19937_64& rng, int rows, int cols);
/// Haar-ish random unitary: Q factor of a Gaussian matrix.
Matrix random_unitary(std::mt19937_64& rng, int n);

}  // namespace indukt
