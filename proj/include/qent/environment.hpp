#pragma once

#include <span>
#include <utility>
#include <vector>

#include "qent/ensemble.hpp"
#include "qent/record.hpp"
#include "qent/states.hpp"

namespace qent {

// Joint state of the two-qubit system with the fictitious classical
// environment whose pointer states label which branch occurred:
// rho_SE = sum_i p_i |x_i><x_i| (x) U_i(t) rho0 U_i(t)^dag.
// Block-diagonal in the pointer basis by construction; the pointer basis is
// the fixed canonical basis (entropies are basis-invariant, so nothing
// measurable depends on that choice).
class SystemEnvironmentState {
public:
    SystemEnvironmentState(std::size_t env_dim, DensityOperator joint);

    std::size_t env_dim() const { return env_dim_; }
    const DensityOperator &joint() const { return joint_; }

    DensityOperator reduced_system() const;      // Tr_E, a [2,2] operator
    DensityOperator reduced_environment() const; // Tr_S, diag(p_i)

private:
    std::size_t env_dim_;
    DensityOperator joint_;
};

SystemEnvironmentState embed(const Ensemble &ens, double t);

// I(S:E) = S(rho_S) + S(rho_E) - S(rho_SE), all three entropies by direct
// eigendecomposition of the (4*env_dim)-dimensional joint state.
double mutual_information_full(const SystemEnvironmentState &se);

// Same quantity through the block-entropy identity
// S(sum_i p_i |x_i><x_i| (x) rho_i) = H(p) + sum_i p_i S(rho_i), which
// collapses I(S:E) to S(rho(t)) - sum_i p_i S(branch state i). For pure
// branch states this is S(rho(t)); for unitary branches on a common rho0
// it is S(rho(t)) - S(rho0).
double mutual_information_closed_form(const Ensemble &ens, double t);

// Time intervals (in t/T) where the mutual information decreases, i.e.
// where information flows back from the environment to the system.
struct BackflowReport {
    std::vector<std::pair<double, double>> intervals; // (t_start, t_end), sorted, disjoint
    std::vector<double> witness_values;               // dI/dt at each grid point
};

// Finite-difference witness dI/dt on a uniform grid: central differences in
// the interior, one-sided at the endpoints. Grid points with
// dI/dt < -1e-9 are merged into maximal intervals. Requires >= 3 records
// on a uniform t_over_T grid. The derivative is taken along the t_over_T
// axis the records store.
BackflowReport backflow_intervals(std::span<const TimeSeriesRecord> series);

inline constexpr double kBackflowThreshold = -1e-9;

// The two reportable revival conditions at time t: the ensemble holds
// entanglement on average (so recovered classical information can be
// useful), and some of it is currently hidden.
struct RevivalFlags {
    bool backflow_possible = false;             // average entanglement > 1e-9
    bool hidden_entanglement_positive = false;  // E_h > 1e-9
};

RevivalFlags revival_condition(const Ensemble &ens, double t);

} // namespace qent
