#include <doctest.h>

#include <cmath>

#include "qent/ensemble.hpp"
#include "qent/environment.hpp"
#include "qent/errors.hpp"
#include "qent/measures.hpp"
#include "qent/random.hpp"
#include "qent/states.hpp"

using namespace qent;

namespace {

// T = 1 with the default omega = 2*pi.
Ensemble fig1_ensemble() {
    return Ensemble({Branch::rotation(0.5, Axis::x), Branch::rotation(0.5, Axis::z)},
                    density_from_pure(bell_state(BellKind::phi_plus)));
}

DensityOperator eta_mixture(double eta) {
    return mix({{eta, density_from_pure(bell_state(BellKind::phi_plus))},
                {(1 - eta) / 2, density_from_pure(PureState({{1, 0}, {0, 0}, {0, 0}, {0, 0}}))},
                {(1 - eta) / 2, density_from_pure(PureState({{0, 0}, {0, 0}, {0, 0}, {1, 0}}))}});
}

Ensemble eta_ensemble(double eta) {
    return Ensemble({Branch::rotation(0.5, Axis::x), Branch::rotation(0.5, Axis::z)},
                    eta_mixture(eta));
}

} // namespace

TEST_SUITE("ensemble") {

TEST_CASE("local rotation at t = 0 is the identity") {
    CHECK(max_abs_diff(local_rotation(Axis::x, kDefaultOmega, 0.0), identity2()) < 1e-15);
}

TEST_CASE("x rotation at half period is -i sigma_x") {
    ComplexMatrix u = local_rotation(Axis::x, kDefaultOmega, 0.5);
    ComplexMatrix expected(2, 2, {{0, 0}, {0, -1}, {0, -1}, {0, 0}});
    CHECK(max_abs_diff(u, expected) < 1e-12);
}

TEST_CASE("full-period rotations are -identity (identity on density operators)") {
    for (Axis axis : {Axis::x, Axis::y, Axis::z}) {
        ComplexMatrix u = local_rotation(axis, kDefaultOmega, 1.0);
        ComplexMatrix minus_id = ComplexMatrix::identity(2);
        minus_id *= Complex(-1.0, 0.0);
        CHECK(max_abs_diff(u, minus_id) < 1e-12);
    }
}

TEST_CASE("rotations are unitary") {
    for (double t : {0.0, 0.1, 0.37, 0.5, 0.93, 1.0, 2.7}) {
        for (Axis axis : {Axis::x, Axis::y, Axis::z}) {
            ComplexMatrix u = local_rotation(axis, kDefaultOmega, t);
            CHECK(max_abs_diff(u.dagger() * u, identity2()) < 1e-12);
        }
    }
}

TEST_CASE("local rotation preconditions") {
    CHECK_THROWS_AS(local_rotation(Axis::x, kDefaultOmega, -0.1), validation_error);
    CHECK_THROWS_AS(local_rotation(Axis::x, 0.0, 0.1), validation_error);
}

TEST_CASE("x branch turns phi+ into psi+ at half period") {
    DensityOperator rho0 = density_from_pure(bell_state(BellKind::phi_plus));
    DensityOperator moved = branch_state(Branch::rotation(1.0, Axis::x), rho0, 0.5);
    DensityOperator expected = density_from_pure(bell_state(BellKind::psi_plus));
    CHECK(max_abs_diff(moved.matrix(), expected.matrix()) < 1e-12);
}

TEST_CASE("z branch turns phi+ into phi- at half period") {
    DensityOperator rho0 = density_from_pure(bell_state(BellKind::phi_plus));
    DensityOperator moved = branch_state(Branch::rotation(1.0, Axis::z), rho0, 0.5);
    DensityOperator expected = density_from_pure(bell_state(BellKind::phi_minus));
    CHECK(max_abs_diff(moved.matrix(), expected.matrix()) < 1e-12);
}

TEST_CASE("rotation branches act trivially at t = 0") {
    RandomEngine rng(3);
    DensityOperator rho0 = random_two_qubit_density(rng);
    for (Axis axis : {Axis::x, Axis::y, Axis::z}) {
        DensityOperator moved = branch_state(Branch::rotation(1.0, axis), rho0, 0.0);
        CHECK(max_abs_diff(moved.matrix(), rho0.matrix()) < 1e-14);
    }
}

TEST_CASE("fixed-unitary branches ignore the evaluation time") {
    RandomEngine rng(4);
    DensityOperator rho0 = random_two_qubit_density(rng);
    Branch b = Branch::fixed_unitary(1.0, pauli_x());
    CHECK(max_abs_diff(branch_state(b, rho0, 0.0).matrix(), branch_state(b, rho0, 0.77).matrix()) <
          1e-15);
}

TEST_CASE("branches can target qubit B") {
    DensityOperator rho0 = density_from_pure(PureState({{1, 0}, {0, 0}, {0, 0}, {0, 0}}));
    Branch b = Branch::fixed_unitary(1.0, pauli_x(), TargetQubit::b);
    DensityOperator moved = branch_state(b, rho0, 0.0);
    // |00> -> |01>
    CHECK(moved.matrix()(1, 1).real() == doctest::Approx(1.0));
}

TEST_CASE("fig1 mixture at half period is the separable Bell mixture") {
    DensityOperator rho = ensemble_density(fig1_ensemble(), 0.5);
    DensityOperator expected = mix({{0.5, density_from_pure(bell_state(BellKind::phi_minus))},
                                    {0.5, density_from_pure(bell_state(BellKind::psi_plus))}});
    CHECK(max_abs_diff(rho.matrix(), expected.matrix()) < 1e-12);
}

TEST_CASE("fig1 mixture returns to phi+ after a full period") {
    DensityOperator rho = ensemble_density(fig1_ensemble(), 1.0);
    DensityOperator expected = density_from_pure(bell_state(BellKind::phi_plus));
    CHECK(max_abs_diff(rho.matrix(), expected.matrix()) < 1e-12);
}

TEST_CASE("eta=0 mixture at half period is maximally mixed") {
    DensityOperator rho = ensemble_density(eta_ensemble(0.0), 0.5);
    ComplexMatrix expected = ComplexMatrix::identity(4);
    expected *= Complex(0.25, 0.0);
    CHECK(max_abs_diff(rho.matrix(), expected) < 1e-12);
}

TEST_CASE("average entanglement of fig1 is constant at 1") {
    Ensemble ens = fig1_ensemble();
    for (double t : {0.0, 0.13, 0.25, 0.5, 0.77, 1.0}) {
        CHECK(average_entanglement(ens, t) == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("ensembles of product states carry no average entanglement") {
    Ensemble ens({Branch::rotation(0.5, Axis::x), Branch::rotation(0.5, Axis::z)},
                 density_from_pure(PureState({{1, 0}, {0, 0}, {0, 0}, {0, 0}})));
    for (double t : {0.0, 0.31, 0.5}) CHECK(average_entanglement(ens, t) <= 1e-10);
}

TEST_CASE("average entanglement of the eta=0.5 ensemble is E_f(rho0)") {
    Ensemble ens = eta_ensemble(0.5);
    for (double t : {0.0, 0.2, 0.5, 0.9}) {
        CHECK(average_entanglement(ens, t) == doctest::Approx(0.354578902665270).epsilon(1e-9));
    }
}

TEST_CASE("hidden entanglement of fig1 peaks at half period and vanishes at T") {
    Ensemble ens = fig1_ensemble();
    CHECK(hidden_entanglement(ens, 0.5) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(hidden_entanglement(ens, 1.0) <= 1e-9);
}

TEST_CASE("separable ensembles have zero hidden entanglement") {
    Ensemble ens = eta_ensemble(0.0);
    for (double t : {0.0, 0.25, 0.5, 0.75}) CHECK(hidden_entanglement(ens, t) <= 1e-10);
}

TEST_CASE("average entanglement is time-independent for any fixed ensemble") {
    RandomEngine rng(51);
    for (int it = 0; it < 20; ++it) {
        Ensemble ens = random_ensemble(rng);
        const double reference = average_entanglement(ens, 0.0);
        for (int j = 1; j <= 10; ++j) {
            CHECK(std::abs(average_entanglement(ens, 0.2 * j) - reference) < 1e-9);
        }
    }
}

TEST_CASE("fig quantities are periodic with period T") {
    for (const Ensemble &ens : {fig1_ensemble(), eta_ensemble(0.5)}) {
        for (double t : {0.1, 0.33, 0.48}) {
            CHECK(std::abs(entanglement_of_formation(ensemble_density(ens, t)) -
                           entanglement_of_formation(ensemble_density(ens, t + 1.0))) < 1e-9);
            CHECK(std::abs(von_neumann_entropy(ensemble_density(ens, t)) -
                           von_neumann_entropy(ensemble_density(ens, t + 1.0))) < 1e-9);
            CHECK(std::abs(hidden_entanglement(ens, t) - hidden_entanglement(ens, t + 1.0)) < 1e-9);
            CHECK(std::abs(mutual_information_closed_form(ens, t) -
                           mutual_information_closed_form(ens, t + 1.0)) < 1e-9);
        }
    }
}

TEST_CASE("hidden entanglement restates E_av - E_f as an identity") {
    RandomEngine rng(57);
    std::uniform_real_distribution<double> time_dist(0.0, 2.0);
    for (int it = 0; it < 200; ++it) {
        Ensemble ens = random_ensemble(rng);
        const double t = time_dist(rng);
        const double lhs = hidden_entanglement(ens, t) +
                           entanglement_of_formation(ensemble_density(ens, t));
        CHECK(std::abs(lhs - average_entanglement(ens, t)) < 1e-10);
        CHECK(hidden_entanglement(ens, t) >= 0.0);
    }
}

TEST_CASE("ensemble validation") {
    DensityOperator rho0 = density_from_pure(bell_state(BellKind::phi_plus));
    CHECK_THROWS_AS(Ensemble({}, rho0), validation_error);
    CHECK_THROWS_AS(Ensemble({Branch::rotation(0.6, Axis::x), Branch::rotation(0.6, Axis::z)}, rho0),
                    validation_error);
    CHECK_THROWS_AS(Ensemble({Branch::rotation(1.2, Axis::x)}, rho0), validation_error);
    ComplexMatrix not_unitary(2, 2, {{1, 0}, {0, 0}, {0, 0}, {0.5, 0}});
    CHECK_THROWS_AS(Ensemble({Branch::fixed_unitary(1.0, not_unitary)}, rho0), validation_error);
    CHECK_THROWS_AS(Ensemble({Branch::rotation(1.0, Axis::x)}, rho0.with_dims({4})),
                    validation_error);
}

} // TEST_SUITE
