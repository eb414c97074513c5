#pragma once

#include <numbers>
#include <variant>
#include <vector>

#include "qent/states.hpp"

namespace qent {

inline constexpr double kDefaultOmega = 2.0 * std::numbers::pi; // T = 1

enum class Axis { x, y, z };
enum class TargetQubit { a, b };

// One classical alternative of the noisy evolution: with probability
// `probability` the target qubit undergoes either the rotation
// exp(-i sigma_axis omega t / 2) or a fixed (time-independent) 2x2 unitary.
struct Branch {
    double probability = 0.0;
    TargetQubit target = TargetQubit::a;
    std::variant<Axis, ComplexMatrix> generator = Axis::x;
    double omega = kDefaultOmega;

    static Branch rotation(double probability, Axis axis, double omega = kDefaultOmega,
                           TargetQubit target = TargetQubit::a);
    static Branch fixed_unitary(double probability, ComplexMatrix unitary,
                                TargetQubit target = TargetQubit::a);
};

// The physical ensemble {(p_i, U_i(t) rho0 U_i(t)^dag)}: branch weights are
// constant in time and the branch unitaries act locally on one qubit.
// Time is a parameter of evaluation, not state, so an Ensemble is an
// immutable value that can be evaluated at any t.
class Ensemble {
public:
    Ensemble(std::vector<Branch> branches, DensityOperator initial_state);

    const std::vector<Branch> &branches() const { return branches_; }
    const DensityOperator &initial_state() const { return initial_state_; }

private:
    std::vector<Branch> branches_;
    DensityOperator initial_state_;
};

// exp(-i sigma_axis omega t / 2) = cos(omega t/2) I - i sin(omega t/2) sigma_axis.
// Note the global phase convention: at t = T = 2*pi/omega this is -I, which
// acts as the identity on density operators.
ComplexMatrix local_rotation(Axis axis, double omega, double t);

// The branch unitary as a 2x2 matrix at time t.
ComplexMatrix branch_unitary(const Branch &branch, double t);

// (U_i(t) x 1) rho0 (U_i(t) x 1)^dag with the unitary on the branch target.
DensityOperator branch_state(const Branch &branch, const DensityOperator &rho0, double t);

// sum_i p_i U_i(t) rho0 U_i(t)^dag.
DensityOperator ensemble_density(const Ensemble &ens, double t);

// sum_i p_i E_f(branch state i); reduces to the entropy of entanglement
// when the branch states are pure.
double average_entanglement(const Ensemble &ens, double t);

// E_av - E_f(ensemble density), clamped at zero from below (convexity of
// E_f makes the exact value nonnegative; residuals beyond -1e-10 are an
// error rather than noise).
double hidden_entanglement(const Ensemble &ens, double t);

} // namespace qent
