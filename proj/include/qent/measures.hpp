#pragma once

#include <span>

#include "qent/states.hpp"

namespace qent {

// All entropies are in bits (log base 2). Concurrence and entanglement of
// formation are dimensionless in [0,1] with Bell states scoring exactly 1.

// Shannon entropy H(p) = -sum_i p_i log2 p_i with the 0*log0 = 0 convention.
// Entries must lie in [0,1] and sum to 1 within 1e-9.
double shannon_entropy(std::span<const double> probabilities);

// H(p, 1-p); no distribution validation, p is clamped to [0,1].
double binary_entropy(double p);

// Entropy of the eigenvalue spectrum; eigenvalues below 1e-12 are treated
// as exactly zero.
double von_neumann_entropy(const DensityOperator &rho);

// S(Tr_B |psi><psi|) for a two-qubit pure state.
double entropy_of_entanglement(const PureState &psi);

// Wootters concurrence C = max(0, l1-l2-l3-l4), where l_i are the
// descending square roots of the spectrum of rho * rho_tilde with
// rho_tilde = (sy x sy) rho* (sy x sy). Evaluated through the Hermitian
// similarity sqrt(rho) * rho_tilde * sqrt(rho) so that only the Hermitian
// eigensolver is needed.
double concurrence(const DensityOperator &rho);

// E_f = h((1 + sqrt(1 - C^2))/2) with h the binary entropy; coincides with
// the entropy of entanglement on pure states.
double entanglement_of_formation(const DensityOperator &rho);

// Sum of |negative eigenvalues| of the partial transpose over qubit B.
// For 2x2 systems this vanishes exactly on the separable states, which is
// what makes it an independent oracle for the concurrence.
double negativity(const DensityOperator &rho);

} // namespace qent
