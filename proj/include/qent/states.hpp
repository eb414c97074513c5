#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "qent/matrix.hpp"

namespace qent {

// Computational basis ordering is |00>,|01>,|10>,|11> with qubit A as the
// left (most significant) tensor factor throughout the library.

enum class BellKind { phi_plus, phi_minus, psi_plus, psi_minus };

// Normalized pure state; sum of |amplitude|^2 must be 1 within 1e-10.
class PureState {
public:
    explicit PureState(std::vector<Complex> amplitudes);

    std::size_t dim() const { return amplitudes_.size(); }
    const std::vector<Complex> &amplitudes() const { return amplitudes_; }
    const Complex &operator[](std::size_t i) const { return amplitudes_[i]; }

    // Amplitudes as a dim x 1 column matrix.
    ComplexMatrix column() const;

private:
    std::vector<Complex> amplitudes_;
};

Complex inner_product(const PureState &a, const PureState &b);

PureState bell_state(BellKind kind);

// Trace-one Hermitian PSD matrix with its tensor-product factorization.
// Validated on construction: hermiticity within 1e-10, trace 1 within
// 1e-10, eigenvalues >= -1e-9.
class DensityOperator {
public:
    DensityOperator(std::vector<std::size_t> dims, ComplexMatrix matrix);

    const std::vector<std::size_t> &dims() const { return dims_; }
    const ComplexMatrix &matrix() const { return matrix_; }
    std::size_t dim() const { return matrix_.rows(); }

    // Same matrix reinterpreted with a different subsystem split.
    DensityOperator with_dims(std::vector<std::size_t> dims) const;

    double purity() const; // tr(rho^2)

private:
    std::vector<std::size_t> dims_;
    ComplexMatrix matrix_;
};

inline constexpr double kTraceTolerance = 1e-10;
inline constexpr double kEigenvalueFloor = -1e-9;

// Rank-1 projector |psi><psi|. A 4-dimensional state is tagged as the
// two-qubit split [2,2]; otherwise the state is a single subsystem.
DensityOperator density_from_pure(const PureState &psi);
DensityOperator density_from_pure(const PureState &psi, std::vector<std::size_t> dims);

// Convex combination sum_i p_i rho_i. Probabilities must be nonnegative and
// sum to 1 within 1e-10; all dims must match.
DensityOperator mix(const std::vector<std::pair<double, DensityOperator>> &parts);

// Reduced state of subsystem `keep`, tracing out all the others.
DensityOperator partial_trace(const DensityOperator &rho, std::size_t keep);

// Transpose on one subsystem only. The result is generally not a valid
// density operator (that is the point of the PPT test), hence the raw matrix.
ComplexMatrix partial_transpose(const DensityOperator &rho, std::size_t subsystem);

} // namespace qent
