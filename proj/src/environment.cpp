#include "qent/environment.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qent/errors.hpp"
#include "qent/measures.hpp"

namespace qent {

namespace {

constexpr double kGridTolerance = 1e-9;

double clamp_mutual_information(double value) {
    if (value < -1e-9) {
        throw numerical_error("mutual information came out " + std::to_string(value) +
                              ", below the nonnegativity tolerance");
    }
    return std::max(value, 0.0);
}

} // namespace

SystemEnvironmentState::SystemEnvironmentState(std::size_t env_dim, DensityOperator joint)
    : env_dim_(env_dim), joint_(std::move(joint)) {
    if (env_dim_ == 0) throw validation_error("SystemEnvironmentState: empty environment");
    if (joint_.dims() != std::vector<std::size_t>{env_dim_, 4}) {
        throw validation_error("SystemEnvironmentState: joint state must have dims [env_dim, 4]");
    }
}

DensityOperator SystemEnvironmentState::reduced_system() const {
    return partial_trace(joint_, 1).with_dims({2, 2});
}

DensityOperator SystemEnvironmentState::reduced_environment() const {
    return partial_trace(joint_, 0);
}

SystemEnvironmentState embed(const Ensemble &ens, double t) {
    const std::size_t n = ens.branches().size();
    ComplexMatrix joint(4 * n, 4 * n);
    for (std::size_t i = 0; i < n; ++i) {
        const Branch &b = ens.branches()[i];
        const DensityOperator state = branch_state(b, ens.initial_state(), t);
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t c = 0; c < 4; ++c)
                joint(4 * i + r, 4 * i + c) = b.probability * state.matrix()(r, c);
    }
    return SystemEnvironmentState(n, DensityOperator({n, 4}, std::move(joint)));
}

double mutual_information_full(const SystemEnvironmentState &se) {
    const double s_system = von_neumann_entropy(se.reduced_system());
    const double s_env = von_neumann_entropy(se.reduced_environment());
    const double s_joint = von_neumann_entropy(se.joint());
    return clamp_mutual_information(s_system + s_env - s_joint);
}

double mutual_information_closed_form(const Ensemble &ens, double t) {
    double branch_entropy = 0.0;
    for (const Branch &b : ens.branches()) {
        if (b.probability == 0.0) continue;
        branch_entropy += b.probability * von_neumann_entropy(branch_state(b, ens.initial_state(), t));
    }
    const double s_mixture = von_neumann_entropy(ensemble_density(ens, t));
    return clamp_mutual_information(s_mixture - branch_entropy);
}

BackflowReport backflow_intervals(std::span<const TimeSeriesRecord> series) {
    if (series.size() < 3) {
        throw validation_error("backflow_intervals: need at least 3 grid points");
    }
    const double h = series[1].t_over_T - series[0].t_over_T;
    if (h <= 0.0) throw validation_error("backflow_intervals: grid is not increasing");
    for (std::size_t i = 1; i + 1 < series.size(); ++i) {
        const double step = series[i + 1].t_over_T - series[i].t_over_T;
        if (std::abs(step - h) > kGridTolerance) {
            throw validation_error("backflow_intervals: grid is not uniform");
        }
    }

    const std::size_t n = series.size();
    BackflowReport report;
    report.witness_values.resize(n);
    report.witness_values[0] = (series[1].I_SE - series[0].I_SE) / h;
    report.witness_values[n - 1] = (series[n - 1].I_SE - series[n - 2].I_SE) / h;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        report.witness_values[i] = (series[i + 1].I_SE - series[i - 1].I_SE) / (2.0 * h);
    }

    std::size_t i = 0;
    while (i < n) {
        if (report.witness_values[i] < kBackflowThreshold) {
            std::size_t j = i;
            while (j + 1 < n && report.witness_values[j + 1] < kBackflowThreshold) ++j;
            report.intervals.emplace_back(series[i].t_over_T, series[j].t_over_T);
            i = j + 1;
        } else {
            ++i;
        }
    }
    return report;
}

RevivalFlags revival_condition(const Ensemble &ens, double t) {
    RevivalFlags flags;
    flags.backflow_possible = average_entanglement(ens, t) > 1e-9;
    flags.hidden_entanglement_positive = hidden_entanglement(ens, t) > 1e-9;
    return flags;
}

} // namespace qent
