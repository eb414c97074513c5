#include "qent/ensemble.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "qent/errors.hpp"
#include "qent/measures.hpp"

namespace qent {

namespace {

constexpr double kProbabilitySumTolerance = 1e-10;
constexpr double kUnitarityTolerance = 1e-10;

void validate_branch(const Branch &branch) {
    if (branch.probability < 0.0 || branch.probability > 1.0) {
        throw validation_error("Branch: probability " + std::to_string(branch.probability) +
                               " outside [0,1]");
    }
    if (branch.omega <= 0.0) {
        throw validation_error("Branch: omega must be positive");
    }
    if (const auto *u = std::get_if<ComplexMatrix>(&branch.generator)) {
        if (u->rows() != 2 || u->cols() != 2) {
            throw validation_error("Branch: explicit unitary must be 2x2");
        }
        if (max_abs_diff(u->dagger() * (*u), ComplexMatrix::identity(2)) > kUnitarityTolerance) {
            throw validation_error("Branch: explicit matrix is not unitary within tolerance");
        }
    }
}

} // namespace

Branch Branch::rotation(double probability, Axis axis, double omega, TargetQubit target) {
    Branch b;
    b.probability = probability;
    b.target = target;
    b.generator = axis;
    b.omega = omega;
    return b;
}

Branch Branch::fixed_unitary(double probability, ComplexMatrix unitary, TargetQubit target) {
    Branch b;
    b.probability = probability;
    b.target = target;
    b.generator = std::move(unitary);
    return b;
}

Ensemble::Ensemble(std::vector<Branch> branches, DensityOperator initial_state)
    : branches_(std::move(branches)), initial_state_(std::move(initial_state)) {
    if (branches_.empty()) throw validation_error("Ensemble: at least one branch required");
    if (initial_state_.dims() != std::vector<std::size_t>{2, 2}) {
        throw validation_error("Ensemble: initial state must be a [2,2] density operator");
    }
    double sum = 0.0;
    for (const Branch &b : branches_) {
        validate_branch(b);
        sum += b.probability;
    }
    if (std::abs(sum - 1.0) > kProbabilitySumTolerance) {
        throw validation_error("Ensemble: branch probabilities sum to " + std::to_string(sum) +
                               ", not 1");
    }
}

ComplexMatrix local_rotation(Axis axis, double omega, double t) {
    if (t < 0.0) throw validation_error("local_rotation: t must be nonnegative");
    if (omega <= 0.0) throw validation_error("local_rotation: omega must be positive");
    const double half = 0.5 * omega * t;
    const double c = std::cos(half);
    const double s = std::sin(half);
    const ComplexMatrix *sigma = nullptr;
    switch (axis) {
    case Axis::x: sigma = &pauli_x(); break;
    case Axis::y: sigma = &pauli_y(); break;
    case Axis::z: sigma = &pauli_z(); break;
    }
    if (sigma == nullptr) throw validation_error("local_rotation: unknown axis");
    ComplexMatrix out = ComplexMatrix::identity(2);
    out *= Complex(c, 0.0);
    ComplexMatrix rot = *sigma;
    rot *= Complex(0.0, -s);
    out += rot;
    return out;
}

ComplexMatrix branch_unitary(const Branch &branch, double t) {
    if (const auto *axis = std::get_if<Axis>(&branch.generator)) {
        return local_rotation(*axis, branch.omega, t);
    }
    // Fixed unitaries have no time parameterization; they describe a
    // constant local operation applied with probability p.
    return std::get<ComplexMatrix>(branch.generator);
}

DensityOperator branch_state(const Branch &branch, const DensityOperator &rho0, double t) {
    if (rho0.dims() != std::vector<std::size_t>{2, 2}) {
        throw validation_error("branch_state: initial state must be a [2,2] density operator");
    }
    const ComplexMatrix u = branch_unitary(branch, t);
    const ComplexMatrix full =
        branch.target == TargetQubit::a ? kron(u, identity2()) : kron(identity2(), u);
    return DensityOperator({2, 2}, full * rho0.matrix() * full.dagger());
}

DensityOperator ensemble_density(const Ensemble &ens, double t) {
    std::vector<std::pair<double, DensityOperator>> parts;
    parts.reserve(ens.branches().size());
    for (const Branch &b : ens.branches()) {
        parts.emplace_back(b.probability, branch_state(b, ens.initial_state(), t));
    }
    return mix(parts);
}

double average_entanglement(const Ensemble &ens, double t) {
    double e = 0.0;
    for (const Branch &b : ens.branches()) {
        if (b.probability == 0.0) continue;
        e += b.probability * entanglement_of_formation(branch_state(b, ens.initial_state(), t));
    }
    return e;
}

double hidden_entanglement(const Ensemble &ens, double t) {
    const double raw = average_entanglement(ens, t) - entanglement_of_formation(ensemble_density(ens, t));
    if (raw < -1e-10) {
        throw numerical_error("hidden_entanglement: negative value " + std::to_string(raw) +
                              " breaches convexity tolerance");
    }
    return std::max(raw, 0.0);
}

} // namespace qent
