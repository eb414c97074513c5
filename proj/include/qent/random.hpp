#pragma once

#include <random>

#include "qent/ensemble.hpp"
#include "qent/states.hpp"

namespace qent {

using RandomEngine = std::mt19937_64;

// Haar-like pure state: normalized complex Gaussian amplitude vector.
PureState random_pure_state(std::size_t dim, RandomEngine &rng);

// Random mixed two-qubit state obtained by tracing half of a random pure
// state on a 4 (x) 4 composite.
DensityOperator random_two_qubit_density(RandomEngine &rng);

// Gram-Schmidt orthonormalization of a complex Gaussian 2x2 matrix.
ComplexMatrix random_unitary2(RandomEngine &rng);

// Random local unitary u (x) v for the invariance tests.
ComplexMatrix random_local_unitary4(RandomEngine &rng);

// Ensemble with 2..4 branches carrying random weights, random targets and
// a mix of fixed random unitaries and random-axis rotations, on a random
// mixed initial state.
Ensemble random_ensemble(RandomEngine &rng);

} // namespace qent
