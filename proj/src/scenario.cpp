#include "qent/scenario.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qent/environment.hpp"
#include "qent/errors.hpp"
#include "qent/measures.hpp"

namespace qent {

namespace {

std::vector<Branch> fig_branches(double omega) {
    return {Branch::rotation(0.5, Axis::x, omega), Branch::rotation(0.5, Axis::z, omega)};
}

} // namespace

ScenarioConfig scenario_fig1() {
    ScenarioConfig cfg;
    cfg.initial_state = BellKind::phi_plus;
    cfg.branches = fig_branches(cfg.omega);
    return cfg;
}

ScenarioConfig scenario_fig2(double eta) {
    if (eta < 0.0 || eta > 1.0) {
        throw validation_error("scenario_fig2: eta " + std::to_string(eta) + " outside [0,1]");
    }
    ScenarioConfig cfg;
    cfg.initial_state = EtaMixture{eta};
    cfg.branches = fig_branches(cfg.omega);
    return cfg;
}

DensityOperator eta_mixture_density(double eta) {
    if (eta < 0.0 || eta > 1.0) {
        throw validation_error("eta_mixture_density: eta " + std::to_string(eta) + " outside [0,1]");
    }
    const DensityOperator bell = density_from_pure(bell_state(BellKind::phi_plus));
    const DensityOperator zero = density_from_pure(PureState({{1, 0}, {0, 0}, {0, 0}, {0, 0}}));
    const DensityOperator one = density_from_pure(PureState({{0, 0}, {0, 0}, {0, 0}, {1, 0}}));
    return mix({{eta, bell}, {(1.0 - eta) / 2.0, zero}, {(1.0 - eta) / 2.0, one}});
}

DensityOperator initial_density(const ScenarioConfig &cfg) {
    if (const auto *kind = std::get_if<BellKind>(&cfg.initial_state)) {
        return density_from_pure(bell_state(*kind));
    }
    if (const auto *mixture = std::get_if<EtaMixture>(&cfg.initial_state)) {
        return eta_mixture_density(mixture->eta);
    }
    return std::get<DensityOperator>(cfg.initial_state);
}

Ensemble make_ensemble(const ScenarioConfig &cfg) {
    return Ensemble(cfg.branches, initial_density(cfg));
}

std::vector<TimeSeriesRecord> run_scenario(const ScenarioConfig &cfg) {
    if (cfg.points < 3) throw validation_error("run_scenario: points must be >= 3");
    if (cfg.omega <= 0.0) throw validation_error("run_scenario: omega must be positive");
    if (cfg.t_max_over_T <= 0.0) throw validation_error("run_scenario: t_max_over_T must be positive");

    const Ensemble ens = make_ensemble(cfg);
    const double period = 2.0 * std::numbers::pi / cfg.omega;

    std::vector<TimeSeriesRecord> records;
    records.reserve(cfg.points);
    for (std::size_t j = 0; j < cfg.points; ++j) {
        const double tau = cfg.t_max_over_T * static_cast<double>(j) / static_cast<double>(cfg.points - 1);
        const double t = tau * period;

        const DensityOperator rho = ensemble_density(ens, t);

        TimeSeriesRecord rec;
        rec.t_over_T = tau;
        rec.E_f = entanglement_of_formation(rho);
        rec.E_av = average_entanglement(ens, t);
        const double raw_hidden = rec.E_av - rec.E_f;
        if (raw_hidden < -1e-10) {
            throw numerical_error("run_scenario: hidden entanglement " + std::to_string(raw_hidden) +
                                  " breaches convexity tolerance");
        }
        rec.E_h = std::max(raw_hidden, 0.0);
        rec.S_rho = von_neumann_entropy(rho);
        rec.I_SE = mutual_information_full(embed(ens, t));
        records.push_back(rec);
    }
    return records;
}

SuddenDeathEvents detect_events(std::span<const TimeSeriesRecord> records) {
    SuddenDeathEvents events;
    for (std::size_t i = 1; i < records.size(); ++i) {
        const double prev = records[i - 1].E_f;
        const double cur = records[i].E_f;
        const double t_prev = records[i - 1].t_over_T;
        const double t_cur = records[i].t_over_T;
        if (!events.death_t_over_T && prev >= kEventThreshold && cur < kEventThreshold) {
            events.death_t_over_T =
                t_prev + (t_cur - t_prev) * (prev - kEventThreshold) / (prev - cur);
        } else if (events.death_t_over_T && !events.revival_t_over_T && prev <= kEventThreshold &&
                   cur > kEventThreshold) {
            events.revival_t_over_T =
                t_prev + (t_cur - t_prev) * (kEventThreshold - prev) / (cur - prev);
        }
    }
    return events;
}

} // namespace qent
