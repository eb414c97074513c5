#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qent/errors.hpp"
#include "qent/io.hpp"
#include "qent/scenario.hpp"
#include "qent/selftest.hpp"

namespace {

struct OutputOptions {
    std::size_t points = 1001;
    std::string out_path;  // empty = stdout
    std::string format = "csv";
    bool events = false;
};

void add_output_options(CLI::App *cmd, OutputOptions &opts) {
    cmd->add_option("--points", opts.points, "Number of grid points (>= 3)")
        ->check(CLI::Range(std::size_t{3}, std::size_t{100000000}));
    cmd->add_option("--out", opts.out_path, "Output file (default: stdout)");
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_flag("--events", opts.events,
                  "Report sudden-death/revival times of E_f on stderr");
}

void emit(const std::vector<qent::TimeSeriesRecord> &records, const OutputOptions &opts) {
    if (opts.out_path.empty()) {
        if (opts.format == "csv") qent::write_csv(records, std::cout);
        else qent::write_json(records, std::cout);
    } else {
        const std::filesystem::path path(opts.out_path);
        if (opts.format == "csv") qent::write_csv(records, path);
        else qent::write_json(records, path);
    }
    if (opts.events) {
        const qent::SuddenDeathEvents ev = qent::detect_events(records);
        if (ev.death_t_over_T) std::cerr << "sudden death: t/T = " << *ev.death_t_over_T << '\n';
        else std::cerr << "sudden death: none\n";
        if (ev.revival_t_over_T) std::cerr << "revival: t/T = " << *ev.revival_t_over_T << '\n';
        else std::cerr << "revival: none\n";
    }
}

int run_config(qent::ScenarioConfig cfg, const OutputOptions &opts) {
    cfg.points = opts.points;
    emit(qent::run_scenario(cfg), opts);
    return 0;
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw qent::io_error("cannot read config file " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw qent::io_error("failed reading config file " + path);
    return buffer.str();
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Two-qubit ensembles under random local unitaries: entanglement of formation, "
                 "average/hidden entanglement, entropies and system-environment mutual information"};
    app.require_subcommand(1);

    OutputOptions fig1_opts, fig2_opts, run_opts;
    double eta = 1.0;
    std::string config_path;

    CLI::App *fig1 = app.add_subcommand(
        "fig1", "Bell-state ensemble with equal-probability x/z rotations on qubit A");
    add_output_options(fig1, fig1_opts);

    CLI::App *fig2 = app.add_subcommand(
        "fig2", "Same branches on the eta-mixture initial state");
    fig2->add_option("--eta", eta, "Weight of the Bell component, in [0,1]")
        ->required()
        ->check(CLI::Range(0.0, 1.0));
    add_output_options(fig2, fig2_opts);

    CLI::App *run = app.add_subcommand("run", "Run a scenario described by a JSON config");
    run->add_option("--config", config_path, "Path to the JSON scenario document")->required();
    OutputOptions *run_opts_ptr = &run_opts;
    add_output_options(run, run_opts);

    CLI::App *selftest = app.add_subcommand(
        "selftest", "Run the acceptance suite and exit nonzero on any failure");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 1;
    }

    try {
        if (fig1->parsed()) return run_config(qent::scenario_fig1(), fig1_opts);
        if (fig2->parsed()) return run_config(qent::scenario_fig2(eta), fig2_opts);
        if (run->parsed()) {
            qent::ScenarioConfig cfg = qent::parse_config(read_file(config_path));
            // --points only overrides the config when given on the command line.
            if (run->count("--points") == 0) run_opts_ptr->points = cfg.points;
            return run_config(std::move(cfg), *run_opts_ptr);
        }
        if (selftest->parsed()) return qent::selftest::run_all(std::cout) ? 0 : 1;
    } catch (const qent::validation_error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const qent::io_error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const qent::numerical_error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
