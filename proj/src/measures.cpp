#include "qent/measures.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "qent/eigen.hpp"
#include "qent/errors.hpp"

namespace qent {

namespace {

constexpr double kSpectrumZero = 1e-12;   // eigenvalues below this count as 0
constexpr double kSpectrumFloor = -1e-9;  // anything below this is an error

void require_two_qubit(const DensityOperator &rho, const char *op) {
    if (rho.dims() != std::vector<std::size_t>{2, 2}) {
        throw validation_error(std::string(op) + ": expected a [2,2] density operator");
    }
}

const ComplexMatrix &spin_flip() {
    static const ComplexMatrix yy = kron(pauli_y(), pauli_y());
    return yy;
}

double clamp_unit_interval(double v) { return std::clamp(v, 0.0, 1.0); }

} // namespace

double shannon_entropy(std::span<const double> probabilities) {
    double sum = 0.0;
    double h = 0.0;
    for (double p : probabilities) {
        if (p < -1e-12) throw validation_error("shannon_entropy: negative probability");
        if (p > 1.0 + 1e-9) throw validation_error("shannon_entropy: probability above 1");
        sum += p;
        if (p > 0.0 && p < 1.0) h -= p * std::log2(p);
    }
    if (std::abs(sum - 1.0) > 1e-9) {
        throw validation_error("shannon_entropy: probabilities sum to " + std::to_string(sum));
    }
    return std::max(h, 0.0);
}

double binary_entropy(double p) {
    p = clamp_unit_interval(p);
    double h = 0.0;
    if (p > 0.0 && p < 1.0) h = -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
    return h;
}

double von_neumann_entropy(const DensityOperator &rho) {
    double h = 0.0;
    for (double lambda : hermitian_eigenvalues(rho.matrix())) {
        if (lambda < kSpectrumFloor) {
            throw numerical_error("von_neumann_entropy: eigenvalue below PSD floor");
        }
        if (lambda < kSpectrumZero) continue;
        h -= lambda * std::log2(lambda);
    }
    return std::max(h, 0.0);
}

double entropy_of_entanglement(const PureState &psi) {
    if (psi.dim() != 4) throw validation_error("entropy_of_entanglement: expected a two-qubit state");
    const DensityOperator rho = density_from_pure(psi, {2, 2});
    return von_neumann_entropy(partial_trace(rho, 0));
}

double concurrence(const DensityOperator &rho) {
    require_two_qubit(rho, "concurrence");
    const ComplexMatrix &yy = spin_flip();
    // rho* is taken in the computational basis fixed by the state module.
    const ComplexMatrix rho_tilde = yy * rho.matrix().conjugate() * yy;
    const ComplexMatrix root = matrix_sqrt_psd(rho.matrix());
    const ComplexMatrix similarity = root * rho_tilde * root;

    // Entries at rounding level must be flushed to zero before the square
    // root, which would otherwise amplify them from ~1e-15 to ~3e-8.
    constexpr double kRootFloor = 1e-13;

    std::vector<double> spectrum = hermitian_eigenvalues(similarity);
    std::vector<double> lambdas;
    lambdas.reserve(spectrum.size());
    for (double mu : spectrum) {
        if (mu < kSpectrumFloor) {
            throw numerical_error("concurrence: spin-flip spectrum entry below floor");
        }
        lambdas.push_back(mu < kRootFloor ? 0.0 : std::sqrt(mu));
    }
    std::sort(lambdas.begin(), lambdas.end(), std::greater<double>());
    return clamp_unit_interval(lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3]);
}

double entanglement_of_formation(const DensityOperator &rho) {
    require_two_qubit(rho, "entanglement_of_formation");
    const double c = concurrence(rho);
    const double x = (1.0 + std::sqrt(std::max(0.0, 1.0 - c * c))) / 2.0;
    return clamp_unit_interval(binary_entropy(x));
}

double negativity(const DensityOperator &rho) {
    require_two_qubit(rho, "negativity");
    const ComplexMatrix pt = partial_transpose(rho, 1);
    double total = 0.0;
    for (double lambda : hermitian_eigenvalues(pt)) {
        if (lambda < 0.0) total -= lambda;
    }
    return total;
}

} // namespace qent
