#include "qent/random.hpp"

#include <array>
#include <cmath>
#include <utility>
#include <vector>

namespace qent {

namespace {

Complex gaussian(RandomEngine &rng) {
    static thread_local std::normal_distribution<double> normal(0.0, 1.0);
    return Complex(normal(rng), normal(rng));
}

} // namespace

PureState random_pure_state(std::size_t dim, RandomEngine &rng) {
    std::vector<Complex> amps(dim);
    double norm2 = 0.0;
    for (Complex &a : amps) {
        a = gaussian(rng);
        norm2 += std::norm(a);
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (Complex &a : amps) a *= inv;
    return PureState(std::move(amps));
}

DensityOperator random_two_qubit_density(RandomEngine &rng) {
    const PureState purification = random_pure_state(16, rng);
    const DensityOperator joint = density_from_pure(purification, {4, 4});
    return partial_trace(joint, 0).with_dims({2, 2});
}

ComplexMatrix random_unitary2(RandomEngine &rng) {
    ComplexMatrix u(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) u(i, j) = gaussian(rng);

    // Gram-Schmidt on the columns.
    double n0 = std::sqrt(std::norm(u(0, 0)) + std::norm(u(1, 0)));
    u(0, 0) /= n0;
    u(1, 0) /= n0;
    const Complex overlap = std::conj(u(0, 0)) * u(0, 1) + std::conj(u(1, 0)) * u(1, 1);
    u(0, 1) -= overlap * u(0, 0);
    u(1, 1) -= overlap * u(1, 0);
    double n1 = std::sqrt(std::norm(u(0, 1)) + std::norm(u(1, 1)));
    u(0, 1) /= n1;
    u(1, 1) /= n1;
    return u;
}

ComplexMatrix random_local_unitary4(RandomEngine &rng) {
    return kron(random_unitary2(rng), random_unitary2(rng));
}

Ensemble random_ensemble(RandomEngine &rng) {
    std::uniform_int_distribution<int> branch_count(2, 4);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    const int n = branch_count(rng);

    std::vector<double> weights(n);
    double total = 0.0;
    for (double &w : weights) {
        w = uniform(rng) + 1e-3;
        total += w;
    }

    std::vector<Branch> branches;
    branches.reserve(n);
    for (int i = 0; i < n; ++i) {
        const double p = weights[i] / total;
        const TargetQubit target = uniform(rng) < 0.5 ? TargetQubit::a : TargetQubit::b;
        if (uniform(rng) < 0.5) {
            branches.push_back(Branch::fixed_unitary(p, random_unitary2(rng), target));
        } else {
            const Axis axis = std::array{Axis::x, Axis::y, Axis::z}[rng() % 3];
            const double omega = 0.5 + 9.5 * uniform(rng);
            branches.push_back(Branch::rotation(p, axis, omega, target));
        }
    }
    return Ensemble(std::move(branches), random_two_qubit_density(rng));
}

} // namespace qent
