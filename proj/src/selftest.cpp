#include "qent/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "qent/environment.hpp"
#include "qent/io.hpp"
#include "qent/measures.hpp"
#include "qent/random.hpp"
#include "qent/scenario.hpp"

namespace qent::selftest {

namespace {

constexpr double kEofRho0Half = 0.354578902665270; // E_f of the eta=0.5 initial state

double h2(double p) {
    if (p <= 0.0 || p >= 1.0) return 0.0;
    return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

struct Context {
    std::vector<TimeSeriesRecord> fig1;
    std::vector<TimeSeriesRecord> fig2_half;
    std::vector<TimeSeriesRecord> fig2_zero;
    std::size_t mid = 0;  // index of t/T = 0.5
    std::size_t last = 0; // index of t/T = 1
};

bool fig1_endpoints(const Context &ctx, std::string &why) {
    const auto &r = ctx.fig1;
    if (!near(r.front().E_f, 1.0, 1e-9)) { why = "E_f(0) != 1"; return false; }
    if (!near(r[ctx.mid].E_f, 0.0, 1e-9)) { why = "E_f(T/2) != 0"; return false; }
    if (!near(r[ctx.last].E_f, 1.0, 1e-9)) { why = "E_f(T) != 1"; return false; }
    if (!near(r[ctx.mid].E_h, 1.0, 1e-9)) { why = "E_h(T/2) != 1"; return false; }
    if (!near(r[ctx.last].E_h, 0.0, 1e-9)) { why = "E_h(T) != 0"; return false; }
    return true;
}

bool fig1_entropy_curve(const Context &ctx, std::string &why) {
    if (!near(ctx.fig1[ctx.mid].S_rho, 1.0, 1e-9)) { why = "S(T/2) != 1"; return false; }
    for (const TimeSeriesRecord &rec : ctx.fig1) {
        if (!near(rec.I_SE, rec.S_rho, 1e-9)) {
            why = "I != S at t/T = " + std::to_string(rec.t_over_T);
            return false;
        }
        const double c = std::cos(std::numbers::pi * rec.t_over_T);
        const double oracle = h2((1.0 + c * c) / 2.0);
        if (!near(rec.I_SE, oracle, 1e-8)) {
            why = "I deviates from the analytic curve at t/T = " + std::to_string(rec.t_over_T);
            return false;
        }
    }
    return true;
}

bool fig2_death_revival(const Context &ctx, std::string &why) {
    const SuddenDeathEvents events = detect_events(ctx.fig2_half);
    if (!events.death_t_over_T || *events.death_t_over_T < 0.32 || *events.death_t_over_T > 0.34) {
        why = "death time outside [0.32, 0.34]";
        return false;
    }
    if (!events.revival_t_over_T || *events.revival_t_over_T < 0.66 || *events.revival_t_over_T > 0.68) {
        why = "revival time outside [0.66, 0.68]";
        return false;
    }
    if (!near(ctx.fig2_half[ctx.last].E_f, kEofRho0Half, 1e-4)) {
        why = "E_f(T) does not return to E_f(rho0)";
        return false;
    }
    return true;
}

bool fig2_hidden_saturation(const Context &ctx, std::string &why) {
    double max_eh = -1.0;
    double arg = 0.0;
    for (const TimeSeriesRecord &rec : ctx.fig2_half) {
        if (rec.t_over_T > 0.5) break;
        if (rec.E_h > max_eh) {
            max_eh = rec.E_h;
            arg = rec.t_over_T;
        }
    }
    if (!near(max_eh, kEofRho0Half, 1e-4)) { why = "max E_h != E_f(rho0)"; return false; }
    if (arg >= 0.5) { why = "maximum not attained before T/2"; return false; }
    return true;
}

bool fig2_eta_zero(const Context &ctx, std::string &why) {
    double min_s = 1e9, max_s = -1e9;
    for (const TimeSeriesRecord &rec : ctx.fig2_zero) {
        if (rec.E_f > 1e-9 || rec.E_h > 1e-9) { why = "E_f or E_h not identically zero"; return false; }
        min_s = std::min(min_s, rec.S_rho);
        max_s = std::max(max_s, rec.S_rho);
    }
    if (!near(min_s, 1.0, 1e-9) || !near(ctx.fig2_zero.front().S_rho, 1.0, 1e-9)) {
        why = "min S != 1 at t = 0";
        return false;
    }
    if (!near(max_s, 2.0, 1e-9) || !near(ctx.fig2_zero[ctx.mid].S_rho, 2.0, 1e-9)) {
        why = "max S != 2 at t = T/2";
        return false;
    }
    return true;
}

bool closed_form_equivalence(std::string &why) {
    for (double eta : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        const ScenarioConfig cfg = scenario_fig2(eta);
        const Ensemble ens = make_ensemble(cfg);
        const double period = 2.0 * std::numbers::pi / cfg.omega;
        for (std::size_t j = 0; j < cfg.points; ++j) {
            const double t = period * static_cast<double>(j) / static_cast<double>(cfg.points - 1);
            const double full = mutual_information_full(embed(ens, t));
            const double closed = mutual_information_closed_form(ens, t);
            if (!near(full, closed, 1e-9)) {
                why = "full and closed-form I disagree at eta = " + std::to_string(eta);
                return false;
            }
        }
    }
    return true;
}

bool fig1_backflow(const Context &ctx, std::string &why) {
    const BackflowReport report = backflow_intervals(ctx.fig1);
    if (report.intervals.size() != 1) {
        why = "expected exactly one backflow interval, got " + std::to_string(report.intervals.size());
        return false;
    }
    const double step = ctx.fig1[1].t_over_T - ctx.fig1[0].t_over_T;
    const auto &[start, end] = report.intervals.front();
    if (!near(start, 0.5, step + 1e-12)) { why = "interval start not at t/T = 0.5"; return false; }
    if (!near(end, 1.0, step + 1e-12)) { why = "interval end not at t/T = 1.0"; return false; }
    return true;
}

bool random_ensembles_nonnegative(std::string &why) {
    RandomEngine rng(987654321ULL);
    std::uniform_real_distribution<double> time_dist(0.0, 2.0);
    for (int i = 0; i < 1000; ++i) {
        const Ensemble ens = random_ensemble(rng);
        const double t = time_dist(rng);
        const double raw =
            average_entanglement(ens, t) - entanglement_of_formation(ensemble_density(ens, t));
        if (raw < -1e-10) {
            why = "E_av - E_f = " + std::to_string(raw) + " at sample " + std::to_string(i);
            return false;
        }
    }
    return true;
}

bool oracle_cross_checks(std::string &why) {
    RandomEngine rng(123456789ULL);
    for (int i = 0; i < 1000; ++i) {
        const DensityOperator rho = random_two_qubit_density(rng);
        const bool c_zero = concurrence(rho) < 1e-8;
        const bool n_zero = negativity(rho) < 1e-8;
        if (c_zero != n_zero) {
            why = "concurrence and negativity disagree on separability at sample " + std::to_string(i);
            return false;
        }
    }
    for (int i = 0; i < 1000; ++i) {
        const PureState psi = random_pure_state(4, rng);
        const double eof = entanglement_of_formation(density_from_pure(psi));
        const double see = entropy_of_entanglement(psi);
        if (!near(eof, see, 1e-8)) {
            why = "EoF != entropy of entanglement on a pure state, sample " + std::to_string(i);
            return false;
        }
    }
    return true;
}

bool serialization_determinism(std::string &why) {
    ScenarioConfig cfg = scenario_fig1();
    cfg.points = 5;
    std::ostringstream first, second;
    write_csv(run_scenario(cfg), first);
    write_csv(run_scenario(cfg), second);
    if (first.str() != second.str()) { why = "two runs produced different bytes"; return false; }

    const std::string text = first.str();
    const std::string header = text.substr(0, text.find('\n'));
    if (header != "t_over_T,E_f,E_av,E_h,S_rho,I_SE") { why = "unexpected CSV header"; return false; }
    const std::size_t row_start = text.find('\n') + 1;
    const std::string row = text.substr(row_start, text.find('\n', row_start) - row_start);
    if (row != "0.000000000000,1.000000000000,1.000000000000,0.000000000000,"
               "0.000000000000,0.000000000000") {
        why = "unexpected first CSV row: " + row;
        return false;
    }
    return true;
}

} // namespace

bool run_all(std::ostream &out) {
    Context ctx;
    ctx.fig1 = run_scenario(scenario_fig1());
    ctx.fig2_half = run_scenario(scenario_fig2(0.5));
    ctx.fig2_zero = run_scenario(scenario_fig2(0.0));
    ctx.mid = (ctx.fig1.size() - 1) / 2;
    ctx.last = ctx.fig1.size() - 1;

    struct Criterion {
        const char *name;
        bool ok;
        std::string why;
    };
    std::vector<Criterion> results;
    auto check = [&results](const char *name, auto &&fn) {
        std::string why;
        bool ok = false;
        try {
            ok = fn(why);
        } catch (const std::exception &e) {
            why = std::string("exception: ") + e.what();
        }
        results.push_back({name, ok, std::move(why)});
    };

    check("fig1 endpoint values of E_f and E_h",
          [&](std::string &w) { return fig1_endpoints(ctx, w); });
    check("fig1 entropy equals mutual information and the analytic curve",
          [&](std::string &w) { return fig1_entropy_curve(ctx, w); });
    check("fig2 eta=0.5 sudden death and revival windows",
          [&](std::string &w) { return fig2_death_revival(ctx, w); });
    check("fig2 eta=0.5 hidden entanglement saturates before T/2",
          [&](std::string &w) { return fig2_hidden_saturation(ctx, w); });
    check("fig2 eta=0 stays separable with S in [1,2]",
          [&](std::string &w) { return fig2_eta_zero(ctx, w); });
    check("closed-form mutual information matches full eigendecomposition",
          [&](std::string &w) { return closed_form_equivalence(w); });
    check("fig1 backflow interval is (0.5, 1.0)",
          [&](std::string &w) { return fig1_backflow(ctx, w); });
    check("hidden entanglement nonnegative on 1000 random ensembles",
          [&](std::string &w) { return random_ensembles_nonnegative(w); });
    check("concurrence/negativity and EoF/entropy oracle agreement",
          [&](std::string &w) { return oracle_cross_checks(w); });
    check("CSV output is deterministic with the pinned header and format",
          [&](std::string &w) { return serialization_determinism(w); });

    std::size_t passed = 0;
    for (std::size_t i = 0; i < results.size(); ++i) {
        const Criterion &c = results[i];
        out << (c.ok ? "[PASS] " : "[FAIL] ") << (i + 1) << ". " << c.name;
        if (!c.ok && !c.why.empty()) out << " -- " << c.why;
        out << '\n';
        if (c.ok) ++passed;
    }
    const bool all_ok = passed == results.size();
    out << (all_ok ? "all criteria passed" : "ACCEPTANCE FAILURE") << " (" << passed << "/"
        << results.size() << ")\n";
    return all_ok;
}

} // namespace qent::selftest
