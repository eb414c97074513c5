#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qent/errors.hpp"
#include "qent/io.hpp"
#include "qent/scenario.hpp"

using namespace qent;

namespace {

std::vector<TimeSeriesRecord> small_fig1_series() {
    ScenarioConfig cfg = scenario_fig1();
    cfg.points = 5;
    return run_scenario(cfg);
}

const char *kFig1Config = R"({
  "initial_state": {"type": "bell", "which": "phi_plus"},
  "branches": [
    {"p": 0.5, "qubit": "A", "axis": "x"},
    {"p": 0.5, "qubit": "A", "axis": "z"}
  ]
})";

} // namespace

TEST_SUITE("io") {

TEST_CASE("csv header and t=0 row are pinned") {
    std::ostringstream out;
    write_csv(small_fig1_series(), out);
    const std::string text = out.str();
    CHECK(text.rfind("t_over_T,E_f,E_av,E_h,S_rho,I_SE\n", 0) == 0);
    const std::size_t first = text.find('\n') + 1;
    CHECK(text.substr(first, text.find('\n', first) - first) ==
          "0.000000000000,1.000000000000,1.000000000000,0.000000000000,"
          "0.000000000000,0.000000000000");
}

TEST_CASE("csv uses LF endings and no trailing comma") {
    std::ostringstream out;
    write_csv(small_fig1_series(), out);
    const std::string text = out.str();
    CHECK(text.find('\r') == std::string::npos);
    CHECK(text.find(",\n") == std::string::npos);
    CHECK(text.back() == '\n');
    // header + 5 rows
    CHECK(std::count(text.begin(), text.end(), '\n') == 6);
}

TEST_CASE("identical records serialize to identical bytes") {
    std::ostringstream a, b;
    write_csv(small_fig1_series(), a);
    write_csv(small_fig1_series(), b);
    CHECK(a.str() == b.str());
}

TEST_CASE("empty record arrays are rejected before any file is created") {
    const std::vector<TimeSeriesRecord> empty;
    std::ostringstream out;
    CHECK_THROWS_AS(write_csv(empty, out), validation_error);

    const std::filesystem::path target =
        std::filesystem::temp_directory_path() / "qent_empty_records.csv";
    std::filesystem::remove(target);
    CHECK_THROWS_AS(write_csv(empty, target), validation_error);
    CHECK(!std::filesystem::exists(target));
    CHECK_THROWS_AS(write_json(empty, target), validation_error);
    CHECK(!std::filesystem::exists(target));
}

TEST_CASE("unwritable destinations raise io_error") {
    CHECK_THROWS_AS(write_csv(small_fig1_series(), std::filesystem::path("/nonexistent/dir/x.csv")),
                    io_error);
}

TEST_CASE("json round-trips the records") {
    const std::vector<TimeSeriesRecord> records = small_fig1_series();
    std::ostringstream out;
    write_json(records, out);
    const nlohmann::json doc = nlohmann::json::parse(out.str());
    REQUIRE(doc.is_array());
    REQUIRE(doc.size() == records.size());
    for (std::size_t j = 0; j < records.size(); ++j) {
        CHECK(std::abs(doc[j]["t_over_T"].get<double>() - records[j].t_over_T) < 1e-12);
        CHECK(std::abs(doc[j]["E_f"].get<double>() - records[j].E_f) < 1e-12);
        CHECK(std::abs(doc[j]["E_av"].get<double>() - records[j].E_av) < 1e-12);
        CHECK(std::abs(doc[j]["E_h"].get<double>() - records[j].E_h) < 1e-12);
        CHECK(std::abs(doc[j]["S_rho"].get<double>() - records[j].S_rho) < 1e-12);
        CHECK(std::abs(doc[j]["I_SE"].get<double>() - records[j].I_SE) < 1e-12);
    }
}

TEST_CASE("a minimal config document reproduces fig1") {
    ScenarioConfig parsed = parse_config(kFig1Config);
    ScenarioConfig reference = scenario_fig1();
    CHECK(parsed.omega == doctest::Approx(reference.omega));
    CHECK(parsed.t_max_over_T == doctest::Approx(1.0));
    CHECK(parsed.points == 1001);
    REQUIRE(parsed.branches.size() == 2);
    CHECK(parsed.branches[0].probability == doctest::Approx(0.5));
    CHECK(std::get<Axis>(parsed.branches[0].generator) == Axis::x);
    CHECK(std::get<Axis>(parsed.branches[1].generator) == Axis::z);
    CHECK(parsed.branches[0].omega == doctest::Approx(kDefaultOmega));
    CHECK(std::get<BellKind>(parsed.initial_state) == BellKind::phi_plus);

    parsed.points = 3;
    reference.points = 3;
    std::vector<TimeSeriesRecord> a = run_scenario(parsed);
    std::vector<TimeSeriesRecord> b = run_scenario(reference);
    for (std::size_t j = 0; j < a.size(); ++j) {
        CHECK(std::abs(a[j].E_f - b[j].E_f) < 1e-12);
        CHECK(std::abs(a[j].I_SE - b[j].I_SE) < 1e-12);
    }
}

TEST_CASE("eta mixture config reproduces fig2") {
    ScenarioConfig parsed = parse_config(R"({
      "initial_state": {"type": "eta_mixture", "eta": 0.5},
      "branches": [
        {"p": 0.5, "axis": "x"},
        {"p": 0.5, "axis": "z"}
      ]
    })");
    const EtaMixture mixture = std::get<EtaMixture>(parsed.initial_state);
    CHECK(mixture.eta == doctest::Approx(0.5));
    CHECK(max_abs_diff(initial_density(parsed).matrix(),
                       initial_density(scenario_fig2(0.5)).matrix()) < 1e-14);
}

TEST_CASE("explicit matrices and custom unitaries parse") {
    ScenarioConfig parsed = parse_config(R"({
      "omega": 3.0,
      "t_max_over_T": 2.0,
      "points": 11,
      "initial_state": {"type": "explicit", "matrix": [
        [0.5, 0, 0, [0.5, 0]],
        [0, 0, 0, 0],
        [0, 0, 0, 0],
        [[0.5, 0], 0, 0, 0.5]
      ]},
      "branches": [
        {"p": 1.0, "qubit": "B", "unitary": [[0, [0, -1]], [[0, -1], 0]], "omega": 5.0}
      ]
    })");
    CHECK(parsed.omega == doctest::Approx(3.0));
    CHECK(parsed.t_max_over_T == doctest::Approx(2.0));
    CHECK(parsed.points == 11);
    CHECK(std::get<DensityOperator>(parsed.initial_state).matrix()(0, 3).real() ==
          doctest::Approx(0.5));
    REQUIRE(parsed.branches.size() == 1);
    CHECK(parsed.branches[0].target == TargetQubit::b);
    CHECK(parsed.branches[0].omega == doctest::Approx(5.0));
    const ComplexMatrix &u = std::get<ComplexMatrix>(parsed.branches[0].generator);
    CHECK(u(0, 1) == Complex(0, -1));
}

TEST_CASE("config errors name the offending key") {
    CHECK_THROWS_WITH_AS(parse_config(R"({
      "initial_state": {"type": "bell", "which": "phi_plus"},
      "branches": [{"p": 0.4, "axis": "x"}, {"p": 0.5, "axis": "z"}]
    })"),
                         doctest::Contains("branches"), validation_error);

    CHECK_THROWS_WITH_AS(parse_config(R"({"unexpected": 1, "initial_state": {"type": "bell",
      "which": "phi_plus"}, "branches": [{"p": 1.0, "axis": "x"}]})"),
                         doctest::Contains("unexpected"), validation_error);

    CHECK_THROWS_WITH_AS(parse_config(R"({
      "initial_state": {"type": "eta_mixture", "eta": 1.5},
      "branches": [{"p": 1.0, "axis": "x"}]
    })"),
                         doctest::Contains("eta"), validation_error);

    CHECK_THROWS_WITH_AS(parse_config(R"({
      "points": 2,
      "initial_state": {"type": "bell", "which": "phi_plus"},
      "branches": [{"p": 1.0, "axis": "x"}]
    })"),
                         doctest::Contains("points"), validation_error);

    CHECK_THROWS_AS(parse_config("{not json"), validation_error);

    // a branch needs exactly one generator
    CHECK_THROWS_AS(parse_config(R"({
      "initial_state": {"type": "bell", "which": "phi_plus"},
      "branches": [{"p": 1.0}]
    })"),
                    validation_error);
    CHECK_THROWS_AS(parse_config(R"({
      "initial_state": {"type": "bell", "which": "phi_plus"},
      "branches": [{"p": 1.0, "axis": "x", "unitary": [[1, 0], [0, 1]]}]
    })"),
                    validation_error);

    // non-unitary branch matrix
    CHECK_THROWS_WITH_AS(parse_config(R"({
      "initial_state": {"type": "bell", "which": "phi_plus"},
      "branches": [{"p": 1.0, "unitary": [[1, 0], [0, 0.5]]}]
    })"),
                         doctest::Contains("unitary"), validation_error);

    // explicit matrix that is not a density operator
    CHECK_THROWS_WITH_AS(parse_config(R"({
      "initial_state": {"type": "explicit", "matrix": [
        [1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]
      ]},
      "branches": [{"p": 1.0, "axis": "x"}]
    })"),
                         doctest::Contains("matrix"), validation_error);

    // missing required keys
    CHECK_THROWS_WITH_AS(parse_config(R"({"branches": [{"p": 1.0, "axis": "x"}]})"),
                         doctest::Contains("initial_state"), validation_error);
    CHECK_THROWS_WITH_AS(parse_config(R"({"initial_state": {"type": "bell", "which": "phi_plus"}})"),
                         doctest::Contains("branches"), validation_error);
}

TEST_CASE("files are written and readable back") {
    const std::filesystem::path dir = std::filesystem::temp_directory_path();
    const std::filesystem::path csv = dir / "qent_io_test.csv";
    const std::filesystem::path json = dir / "qent_io_test.json";
    const std::vector<TimeSeriesRecord> records = small_fig1_series();

    write_csv(records, csv);
    write_json(records, json);
    CHECK(std::filesystem::file_size(csv) > 0);

    std::ifstream in(json);
    nlohmann::json doc;
    in >> doc;
    CHECK(doc.size() == records.size());

    std::filesystem::remove(csv);
    std::filesystem::remove(json);
}

} // TEST_SUITE
