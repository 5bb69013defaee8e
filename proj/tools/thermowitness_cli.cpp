// Command-line surface for the Bose-gas entanglement-witness library:
// closed-form temperatures, measurement verdicts, parameter sweeps,
// packaged reproductions and the desk-scale verification suite.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "thermowitness/constants.hpp"
#include "thermowitness/gas.hpp"
#include "thermowitness/oracle.hpp"
#include "thermowitness/special.hpp"
#include "thermowitness/verify.hpp"
#include "thermowitness/witness.hpp"

using nlohmann::json;
using namespace thermowitness;

namespace {

// ---------------------------------------------------------------------------
// quantities with SI suffixes
// ---------------------------------------------------------------------------

double metric_prefix(const std::string& p) {
    if (p.empty()) return 1.0;
    if (p == "f") return 1e-15;
    if (p == "p") return 1e-12;
    if (p == "n") return 1e-9;
    if (p == "u") return 1e-6;
    if (p == "m") return 1e-3;
    if (p == "c") return 1e-2;
    if (p == "k") return 1e3;
    if (p == "M") return 1e6;
    if (p == "G") return 1e9;
    throw ParseError("unknown metric prefix '" + p + "'");
}

// "10um" -> 1e-5 (base unit m); bare numbers are taken as base SI.
double parse_quantity(const std::string& text, const std::string& base_unit) {
    std::size_t pos = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &pos);
    } catch (const std::exception&) {
        throw ParseError("cannot parse number from '" + text + "'");
    }
    std::string suffix = text.substr(pos);
    while (!suffix.empty() && suffix.front() == ' ') suffix.erase(suffix.begin());
    if (suffix.empty()) return value;
    if (suffix == base_unit) return value;
    if (suffix.size() > base_unit.size() &&
        suffix.substr(suffix.size() - base_unit.size()) == base_unit)
        return value * metric_prefix(suffix.substr(0, suffix.size() - base_unit.size()));
    throw ParseError("expected unit '" + base_unit + "' in '" + text + "'");
}

// ---------------------------------------------------------------------------
// tabular output: ordered key/value rows, CSV or JSON
// ---------------------------------------------------------------------------

using Cell = std::variant<double, std::string>;

struct OutputRecord {
    std::vector<std::pair<std::string, Cell>> fields; // key carries "name(unit)"

    void num(const std::string& key, double v) { fields.emplace_back(key, v); }
    void str(const std::string& key, std::string v) { fields.emplace_back(key, std::move(v)); }
};

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

struct Emitter {
    std::string format = "csv"; // csv | json
    bool meta = true;
    std::ostream* out = &std::cout;

    void emit(const std::vector<OutputRecord>& rows) const {
        if (format == "json")
            emit_json(rows);
        else
            emit_csv(rows);
    }

    void emit_csv(const std::vector<OutputRecord>& rows) const {
        if (rows.empty()) return;
        if (meta) *out << "# thermowitness v1 (" << __DATE__ " " __TIME__ << ")\n";
        bool first = true;
        for (const auto& [key, cell] : rows.front().fields) {
            if (!first) *out << ",";
            *out << csv_quote(key);
            first = false;
        }
        *out << "\n";
        for (const auto& row : rows) {
            first = true;
            for (const auto& [key, cell] : row.fields) {
                if (!first) *out << ",";
                if (std::holds_alternative<double>(cell))
                    *out << format_number(std::get<double>(cell));
                else
                    *out << csv_quote(std::get<std::string>(cell));
                first = false;
            }
            *out << "\n";
        }
    }

    void emit_json(const std::vector<OutputRecord>& rows) const {
        json doc;
        if (meta) doc["meta"] = {{"tool", "thermowitness"}, {"version", "1"},
                                 {"built", __DATE__ " " __TIME__}};
        doc["rows"] = json::array();
        for (const auto& row : rows) {
            json r = json::object();
            for (const auto& [key, cell] : row.fields) {
                if (std::holds_alternative<double>(cell))
                    r[key] = std::stod(format_number(std::get<double>(cell)));
                else
                    r[key] = std::get<std::string>(cell);
            }
            doc["rows"].push_back(std::move(r));
        }
        *out << doc.dump(2) << "\n";
    }
};

// ---------------------------------------------------------------------------
// scenario model
// ---------------------------------------------------------------------------

struct Scenario {
    gas::GasSpec spec;
    std::optional<std::string> species;
    bool auto_partition = false; // M^d = N
    int cuts = 1;
    std::optional<witness::Measurement> measurement;

    struct Sweep {
        std::string variable; // M, T, N, L, m, d
        double from = 0.0, to = 0.0;
        int points = 0;
        bool log_scale = false;
    };
    std::optional<Sweep> sweep;

    int effective_cuts() const {
        if (!auto_partition) return cuts;
        return std::max(1l, std::lround(std::pow(spec.particle_number,
                                                 1.0 / spec.dimension)));
    }
};

double json_quantity(const json& v, const std::string& unit, const std::string& field) {
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) return parse_quantity(v.get<std::string>(), unit);
    throw ParseError("field '" + field + "' must be a number or quantity string");
}

Scenario parse_scenario(const json& doc) {
    Scenario sc;
    if (!doc.contains("gas") || !doc["gas"].is_object())
        throw ParseError("scenario: missing 'gas' object");
    const json& g = doc["gas"];
    if (!g.contains("d")) throw ParseError("scenario: missing field gas.d");
    if (!g.contains("L")) throw ParseError("scenario: missing field gas.L");
    if (!g.contains("N")) throw ParseError("scenario: missing field gas.N");
    sc.spec.dimension = g["d"].get<int>();
    sc.spec.box_length = json_quantity(g["L"], "m", "gas.L");
    sc.spec.particle_number = json_quantity(g["N"], "", "gas.N");
    const bool has_species = g.contains("species");
    const bool has_mass = g.contains("mass");
    if (has_species == has_mass)
        throw ParseError("scenario: exactly one of gas.species or gas.mass is required");
    if (has_species) {
        sc.species = g["species"].get<std::string>();
        sc.spec.mass = lookup_species(*sc.species).mass;
    } else {
        sc.spec.mass = json_quantity(g["mass"], "kg", "gas.mass");
    }
    sc.spec.validate();

    if (doc.contains("partition")) {
        const json& p = doc["partition"];
        if (p.is_string() && p.get<std::string>() == "auto")
            sc.auto_partition = true;
        else if (p.is_number_integer())
            sc.cuts = p.get<int>();
        else
            throw ParseError("scenario: partition must be an integer or \"auto\"");
    }

    if (doc.contains("measurement")) {
        const json& m = doc["measurement"];
        if (m.contains("temperature"))
            sc.measurement = witness::Measurement::temperature(
                json_quantity(m["temperature"], "K", "measurement.temperature"));
        else if (m.contains("energy"))
            sc.measurement = witness::Measurement::energy(
                json_quantity(m["energy"], "J", "measurement.energy"));
        else
            throw ParseError("scenario: measurement needs 'temperature' or 'energy'");
    }

    if (doc.contains("sweep")) {
        const json& s = doc["sweep"];
        Scenario::Sweep sw;
        for (const char* f : {"variable", "from", "to", "points"})
            if (!s.contains(f)) throw ParseError(std::string("scenario: missing sweep.") + f);
        sw.variable = s["variable"].get<std::string>();
        static const std::vector<std::string> axes = {"M", "T", "N", "L", "m", "d"};
        if (std::find(axes.begin(), axes.end(), sw.variable) == axes.end())
            throw ParseError("scenario: sweep.variable must be one of M,T,N,L,m,d");
        sw.from = s["from"].get<double>();
        sw.to = s["to"].get<double>();
        sw.points = s["points"].get<int>();
        if (sw.points < 1) throw ParseError("scenario: sweep.points must be >= 1");
        if (s.contains("scale")) {
            const auto scale = s["scale"].get<std::string>();
            if (scale == "log")
                sw.log_scale = true;
            else if (scale != "linear")
                throw ParseError("scenario: sweep.scale must be linear or log");
        }
        sc.sweep = sw;
    }
    return sc;
}

OutputRecord witness_row(const gas::GasSpec& spec, int cuts,
                         const std::optional<witness::Measurement>& meas) {
    const witness::Partition part{cuts};
    OutputRecord row;
    row.num("d", spec.dimension);
    row.num("L(m)", spec.box_length);
    row.num("mass(kg)", spec.mass);
    row.num("N", spec.particle_number);
    row.num("M", cuts);
    row.num("E_lowest(J)", witness::lowest_separable_energy(spec, part));
    row.num("T_trans(K)", witness::transition_temperature(spec, part));
    if (spec.dimension == 3)
        row.num("T_crit(K)", gas::critical_temperature(spec));
    else
        row.str("T_crit(K)", "no-finite-condensation");
    row.num("entanglement_length(m)", witness::entanglement_length(spec, part));
    if (meas) {
        const auto rep = witness::verdict(spec, part, *meas);
        row.str("measurement", meas->kind == witness::Measurement::Kind::Energy
                                   ? "energy"
                                   : "temperature");
        row.num("measured_value", meas->value);
        row.num("margin", rep.margin);
        row.str("verdict",
                rep.verdict == witness::Verdict::Entangled ? "Entangled" : "Inconclusive");
    }
    return row;
}

std::vector<OutputRecord> run_scenario(const Scenario& sc) {
    std::vector<OutputRecord> rows;
    if (!sc.sweep) {
        rows.push_back(witness_row(sc.spec, sc.effective_cuts(), sc.measurement));
        return rows;
    }
    const auto& sw = *sc.sweep;
    for (int i = 0; i < sw.points; ++i) {
        const double t = sw.points == 1 ? 0.0 : double(i) / (sw.points - 1);
        const double value = sw.log_scale
                                 ? sw.from * std::pow(sw.to / sw.from, t)
                                 : sw.from + (sw.to - sw.from) * t;
        Scenario point = sc;
        point.sweep.reset();
        if (sw.variable == "M") {
            point.cuts = std::max(1l, std::lround(value));
            point.auto_partition = false;
        } else if (sw.variable == "T") {
            point.measurement = witness::Measurement::temperature(value);
        } else if (sw.variable == "N") {
            point.spec.particle_number = value;
        } else if (sw.variable == "L") {
            point.spec.box_length = value;
        } else if (sw.variable == "m") {
            point.spec.mass = value;
        } else if (sw.variable == "d") {
            point.spec.dimension = std::max(1l, std::lround(value));
        }
        rows.push_back(witness_row(point.spec, point.effective_cuts(), point.measurement));
    }
    return rows;
}

// ---------------------------------------------------------------------------
// packaged reproductions
// ---------------------------------------------------------------------------

gas::GasSpec ketterle_spec() {
    gas::GasSpec spec;
    spec.dimension = 3;
    spec.box_length = 1e-5;
    spec.mass = lookup_species("sodium-23").mass;
    spec.particle_number = 7e5;
    return spec;
}

std::vector<OutputRecord> reproduce_ketterle() {
    const auto spec = ketterle_spec();
    const double t_obs = 2e-5;
    const auto inv = witness::max_witnessed_partition(spec, t_obs);
    const witness::Partition part{static_cast<int>(inv.nearest_cuts)};

    OutputRecord row;
    row.str("scenario", "ketterle");
    row.num("N", spec.particle_number);
    row.num("L(m)", spec.box_length);
    row.num("T_observed(K)", t_obs);
    row.num("M_real", inv.real_cuts);
    row.num("M", static_cast<double>(inv.nearest_cuts));
    row.num("T_trans(K)", witness::transition_temperature(spec, part));
    row.num("entanglement_length(m)", witness::entanglement_length(spec, part));
    row.num("T_crit(K)", gas::critical_temperature(spec));
    row.num("T_trans_fixed_density(K)", witness::transition_temperature_fixed_density(spec));
    row.num("T_trans_over_T_crit",
            witness::transition_temperature_fixed_density(spec) /
                gas::critical_temperature(spec));
    return {row};
}

std::vector<OutputRecord> reproduce_planck() {
    const auto pu = planck_units();
    gas::GasSpec spec;
    spec.dimension = 3;
    spec.box_length = 100.0 * pu.length; // one particle per Planck-length cell
    spec.mass = pu.mass;
    spec.particle_number = 1e6;

    OutputRecord row;
    row.str("scenario", "planck");
    row.num("mass(kg)", spec.mass);
    row.num("density(m^-3)", spec.density());
    row.num("T_trans(K)", witness::transition_temperature_fixed_density(spec));
    row.num("T_planck(K)", pu.temperature);
    return {row};
}

std::vector<OutputRecord> reproduce_dimensions_table() {
    std::vector<OutputRecord> rows;
    for (int d = 1; d <= 3; ++d) {
        gas::GasSpec spec = ketterle_spec();
        spec.dimension = d;
        spec.particle_number = std::pow(7e5, d / 3.0); // same linear density scale
        OutputRecord row;
        row.str("scenario", "dimensions-table");
        row.num("d", d);
        row.num("T_trans_fixed_density(K)",
                witness::transition_temperature_fixed_density(spec));
        if (d == 3)
            row.num("T_crit(K)", gas::critical_temperature(spec));
        else
            row.str("T_crit(K)", "no-finite-condensation");
        rows.push_back(std::move(row));
    }
    return rows;
}

// ---------------------------------------------------------------------------

struct GasFlags {
    int d = 3;
    std::string length, mass_text, species, number;

    void attach(CLI::App* cmd) {
        cmd->add_option("--d", d, "dimension (1-3)");
        cmd->add_option("--L", length, "box length, e.g. 10um")->required();
        cmd->add_option("--N", number, "particle number")->required();
        cmd->add_option("--mass", mass_text, "particle mass, e.g. 3.82e-26kg");
        cmd->add_option("--species", species, "species name, e.g. sodium-23");
    }

    gas::GasSpec resolve() const {
        if (species.empty() == mass_text.empty())
            throw ParseError("exactly one of --species or --mass is required");
        gas::GasSpec spec;
        spec.dimension = d;
        spec.box_length = parse_quantity(length, "m");
        spec.particle_number = parse_quantity(number, "");
        spec.mass = species.empty() ? parse_quantity(mass_text, "kg")
                                    : lookup_species(species).mass;
        spec.validate();
        return spec;
    }
};

int dispatch(int argc, char** argv) {
    CLI::App app{"Thermodynamic entanglement witnesses for the free Bose gas"};
    app.require_subcommand(1);

    Emitter emitter;
    std::string out_path;
    bool no_meta = false;
    app.add_option("--format", emitter.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_flag("--no-meta", no_meta, "suppress the metadata header");
    app.add_option("--out", out_path, "write output to a file instead of stdout");

    auto* constants_cmd = app.add_subcommand("constants", "physical constants and species");

    GasFlags tcrit_gas;
    auto* tcrit_cmd = app.add_subcommand("tcrit", "BEC critical temperature");
    tcrit_gas.attach(tcrit_cmd);

    GasFlags ttrans_gas;
    std::string ttrans_m = "auto";
    auto* ttrans_cmd = app.add_subcommand("ttrans", "entanglement transition temperature");
    ttrans_gas.attach(ttrans_cmd);
    ttrans_cmd->add_option("--M", ttrans_m, "cuts per dimension, or 'auto' for M^d = N");

    GasFlags elowest_gas;
    int elowest_m = 1;
    auto* elowest_cmd = app.add_subcommand("elowest", "separable energy floor");
    elowest_gas.attach(elowest_cmd);
    elowest_cmd->add_option("--M", elowest_m, "cuts per dimension")->required();

    GasFlags invert_gas;
    std::string invert_t;
    auto* invert_cmd =
        app.add_subcommand("invert-m", "largest partition witnessed at a temperature");
    invert_gas.attach(invert_cmd);
    invert_cmd->add_option("--T", invert_t, "temperature, e.g. 20uK")->required();

    GasFlags verdict_gas;
    std::string verdict_m = "auto", verdict_t, verdict_e;
    bool exit_on_verdict = false;
    auto* verdict_cmd = app.add_subcommand("verdict", "entanglement verdict for a measurement");
    verdict_gas.attach(verdict_cmd);
    verdict_cmd->add_option("--M", verdict_m, "cuts per dimension, or 'auto'");
    verdict_cmd->add_option("--T", verdict_t, "measured temperature");
    verdict_cmd->add_option("--E", verdict_e, "measured energy");
    verdict_cmd->add_flag("--exit-on-verdict", exit_on_verdict,
                          "exit 0 if Entangled, 3 if Inconclusive");

    GasFlags scan_gas;
    Scenario::Sweep scan_sweep;
    std::string scan_scale = "linear";
    auto* scan_cmd = app.add_subcommand("scan", "parameter sweep for plotting");
    scan_gas.attach(scan_cmd);
    scan_cmd->add_option("--variable", scan_sweep.variable, "axis: M,T,N,L,m,d")->required();
    scan_cmd->add_option("--from", scan_sweep.from)->required();
    scan_cmd->add_option("--to", scan_sweep.to)->required();
    scan_cmd->add_option("--points", scan_sweep.points)->required();
    scan_cmd->add_option("--scale", scan_scale)->check(CLI::IsMember({"linear", "log"}));

    auto* verify_cmd = app.add_subcommand("verify", "run the numerical verification suite");

    std::string reproduce_name;
    auto* reproduce_cmd = app.add_subcommand("reproduce", "packaged paper-scale scenarios");
    reproduce_cmd->add_option("name", reproduce_name, "ketterle | planck | dimensions-table")
        ->required();

    std::string scenario_path;
    auto* run_cmd = app.add_subcommand("run", "run a JSON scenario file");
    run_cmd->add_option("file", scenario_path, "scenario file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    emitter.meta = !no_meta;

    std::ofstream file_out;
    if (!out_path.empty()) {
        file_out.open(out_path);
        if (!file_out) {
            std::cerr << "error: cannot open output file " << out_path << "\n";
            return 1;
        }
        emitter.out = &file_out;
    }

    try {
        std::vector<OutputRecord> rows;

        if (constants_cmd->parsed()) {
            const auto& pc = codata();
            OutputRecord row;
            row.num("hbar(J s)", pc.hbar);
            row.num("k_B(J/K)", pc.boltzmann);
            row.num("atomic_mass_unit(kg)", pc.atomic_mass_unit);
            row.num("c(m/s)", pc.light_speed);
            row.num("G(m^3/kg s^2)", pc.gravitation);
            row.num("planck_mass(kg)", pc.planck_mass);
            row.num("planck_length(m)", pc.planck_length);
            row.num("planck_temperature(K)", pc.planck_temperature);
            rows.push_back(std::move(row));
            for (const auto& sp : species_registry()) {
                OutputRecord r;
                r.str("species", sp.name);
                r.num("mass(kg)", sp.mass);
                // species rows go out as a second table in CSV mode
                rows.push_back(std::move(r));
            }
            Emitter head = emitter;
            head.emit({rows.front()});
            rows.erase(rows.begin());
            Emitter tail = emitter;
            tail.meta = false;
            tail.emit(rows);
            return 0;
        }

        if (tcrit_cmd->parsed()) {
            const auto spec = tcrit_gas.resolve();
            OutputRecord row;
            row.num("T_crit(K)", gas::critical_temperature(spec));
            rows.push_back(std::move(row));
        } else if (ttrans_cmd->parsed()) {
            const auto spec = ttrans_gas.resolve();
            OutputRecord row;
            if (ttrans_m == "auto") {
                row.str("partition", "auto (M^d = N)");
                row.num("T_trans(K)", witness::transition_temperature_fixed_density(spec));
            } else {
                const witness::Partition part{std::stoi(ttrans_m)};
                row.num("M", part.cuts);
                row.num("T_trans(K)", witness::transition_temperature(spec, part));
            }
            rows.push_back(std::move(row));
        } else if (elowest_cmd->parsed()) {
            const auto spec = elowest_gas.resolve();
            OutputRecord row;
            row.num("M", elowest_m);
            row.num("E_lowest(J)",
                    witness::lowest_separable_energy(spec, witness::Partition{elowest_m}));
            rows.push_back(std::move(row));
        } else if (invert_cmd->parsed()) {
            const auto spec = invert_gas.resolve();
            const auto inv = witness::max_witnessed_partition(
                spec, parse_quantity(invert_t, "K"));
            OutputRecord row;
            row.num("M_real", inv.real_cuts);
            row.num("M_floor", static_cast<double>(inv.floor_cuts));
            row.num("M_nearest", static_cast<double>(inv.nearest_cuts));
            rows.push_back(std::move(row));
        } else if (verdict_cmd->parsed()) {
            const auto spec = verdict_gas.resolve();
            if (verdict_t.empty() == verdict_e.empty())
                throw ParseError("verdict: exactly one of --T or --E is required");
            Scenario sc;
            sc.spec = spec;
            if (verdict_m == "auto")
                sc.auto_partition = true;
            else
                sc.cuts = std::stoi(verdict_m);
            const auto meas =
                verdict_t.empty()
                    ? witness::Measurement::energy(parse_quantity(verdict_e, "J"))
                    : witness::Measurement::temperature(parse_quantity(verdict_t, "K"));
            const int cuts = sc.effective_cuts();
            rows.push_back(witness_row(spec, cuts, meas));
            emitter.emit(rows);
            if (exit_on_verdict) {
                const auto rep = witness::verdict(spec, witness::Partition{cuts}, meas);
                return rep.verdict == witness::Verdict::Entangled ? 0 : 3;
            }
            return 0;
        } else if (scan_cmd->parsed()) {
            Scenario sc;
            sc.spec = scan_gas.resolve();
            scan_sweep.log_scale = scan_scale == "log";
            sc.sweep = scan_sweep;
            rows = run_scenario(sc);
        } else if (verify_cmd->parsed()) {
            const auto results = verify::run_verification();
            if (emitter.format == "json") {
                json doc;
                doc["checks"] = json::array();
                for (const auto& r : results)
                    doc["checks"].push_back(
                        {{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
                doc["all_passed"] = verify::all_passed(results);
                *emitter.out << doc.dump(2) << "\n";
            } else {
                for (const auto& r : results)
                    *emitter.out << (r.passed ? "PASS" : "FAIL") << "  " << r.name << "  ("
                                 << r.detail << ")\n";
            }
            return verify::all_passed(results) ? 0 : 1;
        } else if (reproduce_cmd->parsed()) {
            if (reproduce_name == "ketterle")
                rows = reproduce_ketterle();
            else if (reproduce_name == "planck")
                rows = reproduce_planck();
            else if (reproduce_name == "dimensions-table")
                rows = reproduce_dimensions_table();
            else
                throw ParseError("unknown reproduction '" + reproduce_name +
                                 "' (ketterle | planck | dimensions-table)");
        } else if (run_cmd->parsed()) {
            std::ifstream in(scenario_path);
            if (!in) throw ParseError("cannot open scenario file " + scenario_path);
            json doc;
            try {
                doc = json::parse(in);
            } catch (const json::parse_error& e) {
                throw ParseError(std::string("scenario JSON: ") + e.what());
            }
            rows = run_scenario(parse_scenario(doc));
        }

        emitter.emit(rows);
        return 0;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace

int main(int argc, char** argv) { return dispatch(argc, argv); }
