#include "qent/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <set>
#include <string>

#include <json.hpp>

#include "qent/errors.hpp"

namespace qent {

namespace {

using nlohmann::ordered_json;

constexpr const char *kCsvHeader = "t_over_T,E_f,E_av,E_h,S_rho,I_SE";

// Values closer to zero than half the last printed decimal would render as
// "-0.000000000000"; canonicalize them so equal records give equal bytes.
double canonical(double v) { return std::abs(v) < 5e-13 ? 0.0 : v; }

std::string fixed12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12f", canonical(v));
    return buf;
}

void require_records(std::span<const TimeSeriesRecord> records, const char *op) {
    if (records.empty()) throw validation_error(std::string(op) + ": empty record array");
    for (const TimeSeriesRecord &r : records) {
        for (double v : {r.t_over_T, r.E_f, r.E_av, r.E_h, r.S_rho, r.I_SE}) {
            if (!std::isfinite(v)) throw numerical_error(std::string(op) + ": non-finite record field");
        }
    }
}

template <typename Writer>
void write_to_file(const std::filesystem::path &destination, Writer &&writer) {
    std::ofstream out(destination, std::ios::binary);
    if (!out) throw io_error("cannot open " + destination.string() + " for writing");
    writer(out);
    out.flush();
    if (!out) throw io_error("failed writing " + destination.string());
}

ordered_json record_to_json(const TimeSeriesRecord &r) {
    ordered_json obj;
    obj["t_over_T"] = r.t_over_T;
    obj["E_f"] = r.E_f;
    obj["E_av"] = r.E_av;
    obj["E_h"] = r.E_h;
    obj["S_rho"] = r.S_rho;
    obj["I_SE"] = r.I_SE;
    return obj;
}

[[noreturn]] void fail_key(const std::string &key, const std::string &why) {
    throw validation_error("config: key '" + key + "' " + why);
}

void require_keys(const ordered_json &obj, const std::set<std::string> &allowed,
                  const std::string &context) {
    for (const auto &item : obj.items()) {
        if (!allowed.count(item.key())) {
            throw validation_error("config: unknown key '" + item.key() + "' in " + context);
        }
    }
}

double number_at(const ordered_json &obj, const std::string &key) {
    if (!obj.at(key).is_number()) fail_key(key, "must be a number");
    return obj.at(key).get<double>();
}

Complex parse_complex(const ordered_json &entry, const std::string &key) {
    if (entry.is_number()) return Complex(entry.get<double>(), 0.0);
    if (entry.is_array() && entry.size() == 2 && entry[0].is_number() && entry[1].is_number()) {
        return Complex(entry[0].get<double>(), entry[1].get<double>());
    }
    fail_key(key, "entries must be numbers or [re, im] pairs");
}

ComplexMatrix parse_matrix(const ordered_json &rows, std::size_t n, const std::string &key) {
    if (!rows.is_array() || rows.size() != n) {
        fail_key(key, "must be a " + std::to_string(n) + "x" + std::to_string(n) + " array of rows");
    }
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!rows[i].is_array() || rows[i].size() != n) {
            fail_key(key, "row " + std::to_string(i) + " must have " + std::to_string(n) + " entries");
        }
        for (std::size_t j = 0; j < n; ++j) m(i, j) = parse_complex(rows[i][j], key);
    }
    return m;
}

BellKind parse_bell_kind(const std::string &name) {
    if (name == "phi_plus") return BellKind::phi_plus;
    if (name == "phi_minus") return BellKind::phi_minus;
    if (name == "psi_plus") return BellKind::psi_plus;
    if (name == "psi_minus") return BellKind::psi_minus;
    fail_key("initial_state.which", "must be one of phi_plus|phi_minus|psi_plus|psi_minus");
}

void parse_initial_state(const ordered_json &obj, ScenarioConfig &cfg) {
    if (!obj.is_object() || !obj.contains("type") || !obj.at("type").is_string()) {
        fail_key("initial_state", "must be an object with a string 'type'");
    }
    const std::string type = obj.at("type").get<std::string>();
    if (type == "bell") {
        require_keys(obj, {"type", "which"}, "initial_state");
        if (!obj.contains("which") || !obj.at("which").is_string()) {
            fail_key("initial_state.which", "is required for type 'bell'");
        }
        cfg.initial_state = parse_bell_kind(obj.at("which").get<std::string>());
    } else if (type == "eta_mixture") {
        require_keys(obj, {"type", "eta"}, "initial_state");
        if (!obj.contains("eta")) fail_key("initial_state.eta", "is required for type 'eta_mixture'");
        const double eta = number_at(obj, "eta");
        if (eta < 0.0 || eta > 1.0) fail_key("initial_state.eta", "must lie in [0,1]");
        cfg.initial_state = EtaMixture{eta};
    } else if (type == "explicit") {
        require_keys(obj, {"type", "matrix"}, "initial_state");
        if (!obj.contains("matrix")) fail_key("initial_state.matrix", "is required for type 'explicit'");
        const ComplexMatrix m = parse_matrix(obj.at("matrix"), 4, "initial_state.matrix");
        try {
            cfg.initial_state = DensityOperator({2, 2}, m);
        } catch (const std::exception &e) {
            fail_key("initial_state.matrix", std::string("is not a valid density operator: ") + e.what());
        }
    } else {
        fail_key("initial_state.type", "must be one of bell|eta_mixture|explicit");
    }
}

Branch parse_branch(const ordered_json &obj, double default_omega, std::size_t index) {
    const std::string context = "branches[" + std::to_string(index) + "]";
    if (!obj.is_object()) fail_key("branches", "entries must be objects");
    require_keys(obj, {"p", "qubit", "axis", "unitary", "omega"}, context);
    if (!obj.contains("p")) fail_key(context + ".p", "is required");

    Branch b;
    b.probability = number_at(obj, "p");
    if (b.probability < 0.0 || b.probability > 1.0) fail_key(context + ".p", "must lie in [0,1]");

    if (obj.contains("qubit")) {
        const std::string qubit = obj.at("qubit").is_string() ? obj.at("qubit").get<std::string>() : "";
        if (qubit == "A") b.target = TargetQubit::a;
        else if (qubit == "B") b.target = TargetQubit::b;
        else fail_key(context + ".qubit", "must be \"A\" or \"B\"");
    }

    const bool has_axis = obj.contains("axis");
    const bool has_unitary = obj.contains("unitary");
    if (has_axis == has_unitary) {
        fail_key(context, "must carry exactly one of 'axis' or 'unitary'");
    }
    if (has_axis) {
        const std::string axis = obj.at("axis").is_string() ? obj.at("axis").get<std::string>() : "";
        if (axis == "x") b.generator = Axis::x;
        else if (axis == "y") b.generator = Axis::y;
        else if (axis == "z") b.generator = Axis::z;
        else fail_key(context + ".axis", "must be \"x\", \"y\" or \"z\"");
    } else {
        const ComplexMatrix u = parse_matrix(obj.at("unitary"), 2, context + ".unitary");
        if (max_abs_diff(u.dagger() * u, ComplexMatrix::identity(2)) > 1e-10) {
            fail_key(context + ".unitary", "is not unitary within tolerance");
        }
        b.generator = u;
    }

    b.omega = obj.contains("omega") ? number_at(obj, "omega") : default_omega;
    if (b.omega <= 0.0) fail_key(context + ".omega", "must be positive");
    return b;
}

} // namespace

void write_csv(std::span<const TimeSeriesRecord> records, std::ostream &out) {
    require_records(records, "write_csv");
    out << kCsvHeader << '\n';
    for (const TimeSeriesRecord &r : records) {
        out << fixed12(r.t_over_T) << ',' << fixed12(r.E_f) << ',' << fixed12(r.E_av) << ','
            << fixed12(r.E_h) << ',' << fixed12(r.S_rho) << ',' << fixed12(r.I_SE) << '\n';
    }
    if (!out) throw io_error("write_csv: stream failure");
}

void write_csv(std::span<const TimeSeriesRecord> records, const std::filesystem::path &destination) {
    require_records(records, "write_csv");
    write_to_file(destination, [&](std::ostream &out) { write_csv(records, out); });
}

void write_json(std::span<const TimeSeriesRecord> records, std::ostream &out) {
    require_records(records, "write_json");
    ordered_json arr = ordered_json::array();
    for (const TimeSeriesRecord &r : records) arr.push_back(record_to_json(r));
    out << arr.dump(2) << '\n';
    if (!out) throw io_error("write_json: stream failure");
}

void write_json(std::span<const TimeSeriesRecord> records, const std::filesystem::path &destination) {
    require_records(records, "write_json");
    write_to_file(destination, [&](std::ostream &out) { write_json(records, out); });
}

ScenarioConfig parse_config(const std::string &text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const ordered_json::parse_error &e) {
        throw validation_error(std::string("config: malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw validation_error("config: document must be a JSON object");
    require_keys(doc, {"omega", "t_max_over_T", "points", "initial_state", "branches"},
                 "the top-level object");

    ScenarioConfig cfg;
    if (doc.contains("omega")) {
        cfg.omega = number_at(doc, "omega");
        if (cfg.omega <= 0.0) fail_key("omega", "must be positive");
    }
    if (doc.contains("t_max_over_T")) {
        cfg.t_max_over_T = number_at(doc, "t_max_over_T");
        if (cfg.t_max_over_T <= 0.0) fail_key("t_max_over_T", "must be positive");
    }
    if (doc.contains("points")) {
        if (!doc.at("points").is_number_integer()) fail_key("points", "must be an integer");
        const long long points = doc.at("points").get<long long>();
        if (points < 3) fail_key("points", "must be >= 3");
        cfg.points = static_cast<std::size_t>(points);
    }

    if (!doc.contains("initial_state")) fail_key("initial_state", "is required");
    parse_initial_state(doc.at("initial_state"), cfg);

    if (!doc.contains("branches") || !doc.at("branches").is_array() || doc.at("branches").empty()) {
        fail_key("branches", "must be a non-empty array");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < doc.at("branches").size(); ++i) {
        cfg.branches.push_back(parse_branch(doc.at("branches")[i], cfg.omega, i));
        sum += cfg.branches.back().probability;
    }
    if (std::abs(sum - 1.0) > 1e-10) {
        fail_key("branches", "probabilities sum to " + std::to_string(sum) + ", not 1");
    }
    return cfg;
}

} // namespace qent
