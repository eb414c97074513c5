#pragma once

#include <vector>

#include "qent/matrix.hpp"

namespace qent {

// Result of diagonalizing a Hermitian matrix: eigenvalues ascending,
// eigenvector k in column k of `eigenvectors`.
struct EigenSystem {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;
};

// Tolerance for accepting an input as Hermitian (max-norm of H - H^dag).
// Inputs within tolerance are symmetrized before decomposition.
inline constexpr double kHermiticityTolerance = 1e-10;

// Cyclic Jacobi diagonalization of a complex Hermitian matrix. All matrices
// in this library are <= 16x16, so the plain O(n^3)-per-sweep scheme is
// more than fast enough and avoids any external dependency. Iterates until
// the off-diagonal Frobenius norm drops below 1e-12.
EigenSystem hermitian_eigensystem(const ComplexMatrix &h);

// Eigenvalues only (ascending); skips eigenvector accumulation.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix &h);

// Principal square root of a Hermitian positive semidefinite matrix.
// Eigenvalues in [-1e-10, 0) are clamped to zero; anything below -1e-10 is
// rejected as a numerical_error.
ComplexMatrix matrix_sqrt_psd(const ComplexMatrix &a);

} // namespace qent
