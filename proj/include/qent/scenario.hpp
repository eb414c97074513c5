#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "qent/ensemble.hpp"
#include "qent/record.hpp"
#include "qent/states.hpp"

namespace qent {

// Initial state eta*|phi+><phi+| + (1-eta)*(|00><00| + |11><11|)/2:
// entangled with probability eta, separable otherwise, preparation record
// discarded.
struct EtaMixture {
    double eta = 1.0;
};

// Full description of one sweep: time grid, initial state and noise
// branches. Branch omegas are already resolved (scenario factories and the
// config parser fill them in from `omega` when a branch does not carry its
// own).
struct ScenarioConfig {
    double omega = kDefaultOmega;  // T = 2*pi/omega
    double t_max_over_T = 1.0;
    std::size_t points = 1001;     // >= 3, endpoints included
    std::variant<BellKind, EtaMixture, DensityOperator> initial_state = BellKind::phi_plus;
    std::vector<Branch> branches;
};

// The two-branch random-local-field scenario: |phi+> initial state, equal
// probability x- or z-rotation on qubit A.
ScenarioConfig scenario_fig1();

// Same branches, eta-mixture initial state. eta must lie in [0,1].
ScenarioConfig scenario_fig2(double eta);

DensityOperator eta_mixture_density(double eta);
DensityOperator initial_density(const ScenarioConfig &cfg);
Ensemble make_ensemble(const ScenarioConfig &cfg);

// Evaluates every measure on the uniform grid t/T in [0, t_max_over_T].
std::vector<TimeSeriesRecord> run_scenario(const ScenarioConfig &cfg);

// Zero crossings of E_f at the 1e-6 threshold, linearly interpolated
// between grid points: first time E_f drops below the threshold, and the
// first later time it rises back above it.
struct SuddenDeathEvents {
    std::optional<double> death_t_over_T;
    std::optional<double> revival_t_over_T;
};

SuddenDeathEvents detect_events(std::span<const TimeSeriesRecord> records);

inline constexpr double kEventThreshold = 1e-6;

} // namespace qent
