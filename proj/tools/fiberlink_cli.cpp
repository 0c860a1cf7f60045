// Command-line front end: single-point capacities, figure-style sweeps,
// fiber mode counting, EA-advantage search and amplifier power accounting.
//
// Exit codes: 0 success, 2 configuration error, 3 domain error,
// 4 advantage factor not reached below M = 1e60.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fiberlink/capacity.hpp"
#include "fiberlink/link.hpp"
#include "fiberlink/physical.hpp"
#include "fiberlink/sweep.hpp"

using json = nlohmann::json;
using namespace fiberlink;

namespace {

class config_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string fmt(double v) {
    char buf[64];
    std::to_chars_result res =
        (std::isfinite(v) && std::abs(v) >= 1e6)
            ? std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::scientific)
            : std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

struct RunConfig {
    // [link]
    double length_km = 10.0;
    int segments = 5;
    double alpha = 0.05;
    std::string receiver = "passive";
    std::string gain_rule = "g1";
    // [channel]
    double modes = 1e9;
    std::optional<double> tau;  // direct-channel override
    std::optional<double> nu;
    // [power]
    std::optional<double> photons_per_second;
    std::optional<double> watts;
    // [constants]
    PhysicalConstants constants;
    // [fiber] (modes subcommand)
    double core_radius = 25e-6;
    double n_core = 1.46;
    double n_clad = 1.45;
    double slot_rate = 1e10;
    // [sweep]
    bool has_sweep = false;
    std::string sweep_variable = "modes";
    double sweep_start = 1e2;
    double sweep_stop = 1e40;
    int sweep_points = 400;
    std::string sweep_spacing = "log";
    // [output]
    std::string format = "csv";
    std::string out_path;
    // [options]
    bool assume_nu_eff_a_typo = false;
};

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw config_error("invalid number for " + key + ": '" + value + "'");
    }
}

int parse_int(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const int v = std::stoi(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw config_error("invalid integer for " + key + ": '" + value + "'");
    }
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1" || value == "yes") return true;
    if (value == "false" || value == "0" || value == "no") return false;
    throw config_error("invalid boolean for " + key + ": '" + value + "'");
}

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

// Flat "key = value" lines grouped under [section] headers; '#' comments.
std::map<std::string, std::string> parse_config_text(std::istream& in) {
    std::map<std::string, std::string> kv;
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw config_error("config line " + std::to_string(lineno) +
                                   ": malformed section header");
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw config_error("config line " + std::to_string(lineno) +
                               ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw config_error("config line " + std::to_string(lineno) +
                               ": empty key or value");
        kv[section.empty() ? key : section + "." + key] = value;
    }
    return kv;
}

void apply_config_map(RunConfig& cfg, const std::map<std::string, std::string>& kv) {
    for (const auto& [key, value] : kv) {
        if (key == "link.length_km") cfg.length_km = parse_double(key, value);
        else if (key == "link.segments") cfg.segments = parse_int(key, value);
        else if (key == "link.alpha") cfg.alpha = parse_double(key, value);
        else if (key == "link.loss_db_per_km")
            cfg.alpha = attenuation_from_db(parse_double(key, value));
        else if (key == "link.receiver") cfg.receiver = value;
        else if (key == "link.gain_rule") cfg.gain_rule = value;
        else if (key == "channel.modes") cfg.modes = parse_double(key, value);
        else if (key == "channel.tau") cfg.tau = parse_double(key, value);
        else if (key == "channel.nu") cfg.nu = parse_double(key, value);
        else if (key == "power.photons_per_second")
            cfg.photons_per_second = parse_double(key, value);
        else if (key == "power.watts") cfg.watts = parse_double(key, value);
        else if (key == "constants.planck")
            cfg.constants.planck = parse_double(key, value);
        else if (key == "constants.light_speed")
            cfg.constants.light_speed = parse_double(key, value);
        else if (key == "constants.wavelength")
            cfg.constants.wavelength = parse_double(key, value);
        else if (key == "fiber.core_radius") cfg.core_radius = parse_double(key, value);
        else if (key == "fiber.n_core") cfg.n_core = parse_double(key, value);
        else if (key == "fiber.n_clad") cfg.n_clad = parse_double(key, value);
        else if (key == "fiber.slot_rate") cfg.slot_rate = parse_double(key, value);
        else if (key == "sweep.variable") { cfg.sweep_variable = value; cfg.has_sweep = true; }
        else if (key == "sweep.start") { cfg.sweep_start = parse_double(key, value); cfg.has_sweep = true; }
        else if (key == "sweep.stop") { cfg.sweep_stop = parse_double(key, value); cfg.has_sweep = true; }
        else if (key == "sweep.points") { cfg.sweep_points = parse_int(key, value); cfg.has_sweep = true; }
        else if (key == "sweep.spacing") { cfg.sweep_spacing = value; cfg.has_sweep = true; }
        else if (key == "output.format") cfg.format = value;
        else if (key == "output.path") cfg.out_path = value;
        else if (key == "options.assume_nu_eff_a_typo")
            cfg.assume_nu_eff_a_typo = parse_bool(key, value);
        else
            throw config_error("unknown config key: " + key);
    }
}

void apply_preset(RunConfig& cfg, const std::string& name) {
    if (name != "paper-like")
        throw config_error("unknown preset: " + name);
    // Reconstruction of the figure setup, not published ground truth.
    cfg.length_km = 10.0;
    cfg.segments = 5;
    cfg.alpha = 0.05;
    cfg.receiver = "passive";
    cfg.gain_rule = "g1";
    cfg.photons_per_second = 1e16;
    cfg.has_sweep = true;
    cfg.sweep_variable = "modes";
    cfg.sweep_start = 1e2;
    cfg.sweep_stop = 1e40;
    cfg.sweep_points = 400;
    cfg.sweep_spacing = "log";
}

std::string dump_config(const RunConfig& cfg) {
    std::ostringstream os;
    os << "[link]\n";
    os << "length_km = " << fmt(cfg.length_km) << "\n";
    os << "segments = " << cfg.segments << "\n";
    os << "alpha = " << fmt(cfg.alpha) << "\n";
    os << "receiver = " << cfg.receiver << "\n";
    os << "gain_rule = " << cfg.gain_rule << "\n";
    os << "[channel]\n";
    os << "modes = " << fmt(cfg.modes) << "\n";
    if (cfg.tau) os << "tau = " << fmt(*cfg.tau) << "\n";
    if (cfg.nu) os << "nu = " << fmt(*cfg.nu) << "\n";
    os << "[power]\n";
    if (cfg.photons_per_second)
        os << "photons_per_second = " << fmt(*cfg.photons_per_second) << "\n";
    if (cfg.watts) os << "watts = " << fmt(*cfg.watts) << "\n";
    os << "[constants]\n";
    os << "planck = " << fmt(cfg.constants.planck) << "\n";
    os << "light_speed = " << fmt(cfg.constants.light_speed) << "\n";
    os << "wavelength = " << fmt(cfg.constants.wavelength) << "\n";
    os << "[fiber]\n";
    os << "core_radius = " << fmt(cfg.core_radius) << "\n";
    os << "n_core = " << fmt(cfg.n_core) << "\n";
    os << "n_clad = " << fmt(cfg.n_clad) << "\n";
    os << "slot_rate = " << fmt(cfg.slot_rate) << "\n";
    if (cfg.has_sweep) {
        os << "[sweep]\n";
        os << "variable = " << cfg.sweep_variable << "\n";
        os << "start = " << fmt(cfg.sweep_start) << "\n";
        os << "stop = " << fmt(cfg.sweep_stop) << "\n";
        os << "points = " << cfg.sweep_points << "\n";
        os << "spacing = " << cfg.sweep_spacing << "\n";
    }
    os << "[output]\n";
    os << "format = " << cfg.format << "\n";
    if (!cfg.out_path.empty()) os << "path = " << cfg.out_path << "\n";
    os << "[options]\n";
    os << "assume_nu_eff_a_typo = "
       << (cfg.assume_nu_eff_a_typo ? "true" : "false") << "\n";
    return os.str();
}

Receiver receiver_of(const RunConfig& cfg) {
    if (cfg.receiver == "passive") return Receiver::Passive;
    if (cfg.receiver == "active") return Receiver::Active;
    throw config_error("link.receiver must be 'passive' or 'active'");
}

GainRule gain_rule_of(const RunConfig& cfg) {
    if (cfg.gain_rule == "g1") return GainRule::FullRegeneration;
    if (cfg.gain_rule == "g2") return GainRule::ModeDependent;
    throw config_error("link.gain_rule must be 'g1' or 'g2'");
}

SegmentedLink link_of(const RunConfig& cfg) {
    SegmentedLink link;
    link.segment_length_km = cfg.length_km;
    link.segment_count = cfg.segments;
    link.alpha_per_km = cfg.alpha;
    link.receiver = receiver_of(cfg);
    link.gain_rule = gain_rule_of(cfg);
    link.assume_nu_eff_a_typo = cfg.assume_nu_eff_a_typo;
    if (!(link.segment_length_km > 0))
        throw config_error("link.length_km must be > 0");
    if (link.segment_count < 1) throw config_error("link.segments must be >= 1");
    if (link.alpha_per_km < 0) throw config_error("link.alpha must be >= 0");
    return link;
}

// Total photon flux, converted from watts once at load time.
double power_of(const RunConfig& cfg) {
    if (cfg.photons_per_second && cfg.watts)
        throw config_error(
            "power: give exactly one of photons_per_second or watts");
    if (cfg.photons_per_second) {
        if (*cfg.photons_per_second < 0)
            throw config_error("power.photons_per_second must be >= 0");
        return *cfg.photons_per_second;
    }
    if (cfg.watts) {
        if (*cfg.watts < 0) throw config_error("power.watts must be >= 0");
        return photon_flux_from_watts(*cfg.watts, cfg.constants);
    }
    throw config_error("power: one of photons_per_second or watts is required");
}

EffectiveChannel channel_of(const RunConfig& cfg, double M, double P) {
    if (cfg.tau.has_value() != cfg.nu.has_value())
        throw config_error("channel.tau and channel.nu must be given together");
    if (cfg.tau) {
        if (*cfg.tau < 0 || *cfg.tau > 1)
            throw config_error("channel.tau must be in [0, 1]");
        if (*cfg.nu < 0) throw config_error("channel.nu must be >= 0");
        return EffectiveChannel{*cfg.tau, *cfg.nu, 1.0, P / M};
    }
    return effective_channel(link_of(cfg), M, P);
}

// --- output helpers -------------------------------------------------------

using Record = std::vector<std::pair<std::string, std::string>>;

void emit_record(const RunConfig& cfg, const Record& rec, std::ostream& os) {
    if (cfg.format == "json") {
        json obj = json::object();
        for (const auto& [k, v] : rec) {
            double d = 0;
            const auto r = std::from_chars(v.data(), v.data() + v.size(), d);
            if (r.ec == std::errc() && r.ptr == v.data() + v.size())
                obj[k] = d;
            else
                obj[k] = v;
        }
        os << obj.dump() << "\n";
        return;
    }
    for (std::size_t i = 0; i < rec.size(); ++i)
        os << rec[i].first << (i + 1 < rec.size() ? "," : "\n");
    for (std::size_t i = 0; i < rec.size(); ++i)
        os << rec[i].second << (i + 1 < rec.size() ? "," : "\n");
}

const char* kSweepColumns[] = {"x",  "tau_eff", "nu_eff", "gain",       "shannon",
                               "holevo", "ea",  "ea_approx", "power_watts"};

std::vector<std::string> row_cells(const SweepRow& row) {
    if (!row.ok()) {
        const std::string err = "ERR:" + row.error;
        return {fmt(row.x), err, err, err, err, err, err, err, err};
    }
    return {fmt(row.x),       fmt(row.tau_eff), fmt(row.nu_eff),
            fmt(row.gain),    fmt(row.shannon), fmt(row.holevo),
            fmt(row.ea),      fmt(row.ea_approx), fmt(row.power_watts)};
}

void emit_sweep(const RunConfig& cfg, const std::vector<SweepRow>& rows,
                std::ostream& os) {
    if (cfg.format == "json") {
        json arr = json::array();
        for (const auto& row : rows) {
            json obj = json::object();
            const auto cells = row_cells(row);
            for (std::size_t c = 0; c < cells.size(); ++c) {
                if (!row.ok() && c > 0) {
                    obj[kSweepColumns[c]] = cells[c];
                } else {
                    double d = 0;
                    std::from_chars(cells[c].data(),
                                    cells[c].data() + cells[c].size(), d);
                    obj[kSweepColumns[c]] = d;
                }
            }
            arr.push_back(obj);
        }
        os << arr.dump() << "\n";
        return;
    }
    for (std::size_t c = 0; c < std::size(kSweepColumns); ++c)
        os << kSweepColumns[c] << (c + 1 < std::size(kSweepColumns) ? "," : "\n");
    for (const auto& row : rows) {
        const auto cells = row_cells(row);
        for (std::size_t c = 0; c < cells.size(); ++c)
            os << cells[c] << (c + 1 < cells.size() ? "," : "\n");
    }
}

std::ofstream open_out(const RunConfig& cfg) {
    std::ofstream f;
    if (!cfg.out_path.empty()) {
        f.open(cfg.out_path);
        if (!f) throw config_error("cannot open output path: " + cfg.out_path);
    }
    return f;
}

// --- subcommands ----------------------------------------------------------

int cmd_capacity(const RunConfig& cfg) {
    const double P = power_of(cfg);
    if (cfg.modes < 1) throw config_error("channel.modes must be >= 1");
    const EffectiveChannel ec = channel_of(cfg, cfg.modes, P);
    const ChannelParams ch(cfg.modes, P, ec.tau_eff, ec.nu_eff);
    const CapacityResult r = evaluate(ch);
    Record rec{{"shannon", fmt(r.shannon)},
               {"holevo", fmt(r.holevo)},
               {"ea", fmt(r.ea)},
               {"ea_approx", fmt(r.ea_approx)},
               {"ea_term_x0", fmt(r.ea_term_x0)},
               {"ea_term_x1", fmt(r.ea_term_x1)},
               {"slope_T", fmt(r.slope_T)},
               {"tau_eff", fmt(ec.tau_eff)},
               {"nu_eff", fmt(ec.nu_eff)}};
    auto f = open_out(cfg);
    emit_record(cfg, rec, cfg.out_path.empty() ? std::cout : f);
    return 0;
}

int cmd_sweep(const RunConfig& cfg) {
    if (!cfg.has_sweep) throw config_error("sweep: no [sweep] section configured");
    if (cfg.tau)
        throw config_error("sweep: direct channel.tau/nu cannot be swept");
    SweepSpec spec;
    if (cfg.sweep_variable == "modes") spec.variable = SweepVariable::Modes;
    else if (cfg.sweep_variable == "power") spec.variable = SweepVariable::Power;
    else if (cfg.sweep_variable == "length") spec.variable = SweepVariable::SegmentLength;
    else if (cfg.sweep_variable == "segments") spec.variable = SweepVariable::SegmentCount;
    else throw config_error("sweep.variable must be modes|power|length|segments");
    spec.start = cfg.sweep_start;
    spec.stop = cfg.sweep_stop;
    spec.points = cfg.sweep_points;
    if (cfg.sweep_spacing == "log") spec.spacing = Spacing::Log;
    else if (cfg.sweep_spacing == "linear") spec.spacing = Spacing::Linear;
    else throw config_error("sweep.spacing must be log|linear");
    spec.link = link_of(cfg);
    spec.power = power_of(cfg);
    spec.modes = cfg.modes;
    spec.constants = cfg.constants;
    try {
        spec.validate();
    } catch (const domain_error& e) {
        throw config_error(e.what());
    }

    const auto rows = run_sweep(spec);
    auto f = open_out(cfg);
    emit_sweep(cfg, rows, cfg.out_path.empty() ? std::cout : f);
    const bool any_ok =
        std::any_of(rows.begin(), rows.end(), [](const auto& r) { return r.ok(); });
    return any_ok ? 0 : 3;
}

int cmd_modes(const RunConfig& cfg) {
    FiberGeometry geom{cfg.core_radius, cfg.n_core, cfg.n_clad};
    const double N = mode_count(geom, cfg.constants.wavelength);
    const double M = total_channels(std::max(N, 1.0), cfg.slot_rate);
    Record rec{{"spatial_modes", fmt(N)}, {"total_channels", fmt(M)}};
    auto f = open_out(cfg);
    emit_record(cfg, rec, cfg.out_path.empty() ? std::cout : f);
    return 0;
}

int cmd_advantage(const RunConfig& cfg, double factor) {
    const double P = power_of(cfg);
    const EffectiveChannel ec = channel_of(cfg, cfg.modes, P);
    if (!(ec.nu_eff > 0))
        throw domain_error("advantage: nu_eff must be > 0");
    const AdvantageSearch r =
        min_modes_for_advantage(P, ec.tau_eff, ec.nu_eff, factor);
    if (!r.found) {
        std::cerr << "no crossing: ea never reaches " << fmt(factor)
                  << " * holevo below M = 1e60\n";
        return 4;
    }
    Record rec{{"modes", fmt(r.modes)},
               {"ea", fmt(r.ea)},
               {"holevo", fmt(r.holevo)},
               {"ratio", fmt(r.ratio)}};
    auto f = open_out(cfg);
    emit_record(cfg, rec, cfg.out_path.empty() ? std::cout : f);
    return 0;
}

int cmd_power(const RunConfig& cfg) {
    const double P = power_of(cfg);
    const SegmentedLink link = link_of(cfg);
    const EffectiveChannel ec = effective_channel(link, cfg.modes, P);
    const double p_photons =
        power_consumption(ec.photons_per_mode, link.segment_count, ec.gain,
                          link.segment_transmittivity(), link.receiver);
    const double watts = consumption_watts(p_photons, cfg.modes, cfg.constants);
    Record rec{{"photons_per_mode", fmt(ec.photons_per_mode)},
               {"gain", fmt(ec.gain)},
               {"consumption_photons", fmt(p_photons)},
               {"power_watts", fmt(watts)}};
    auto f = open_out(cfg);
    emit_record(cfg, rec, cfg.out_path.empty() ? std::cout : f);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Capacity and power analysis of amplified multi-mode fiber links"};
    app.require_subcommand(0, 1);

    std::string config_path, preset, output_format, out_path;
    bool typo_switch = false, do_dump = false;
    app.add_option("--config", config_path, "configuration file");
    app.add_option("--preset", preset, "named preset (paper-like)");
    app.add_option("--output", output_format, "csv or json");
    app.add_option("--out", out_path, "write result to file instead of stdout");
    app.add_flag("--assume-nu-eff-a-typo", typo_switch,
                 "use the (1 + tau_L n) reading of the G2-active noise formula");
    app.add_flag("--dump-config", do_dump, "print the effective configuration");

    // Field overrides; flags win over the config file.
    std::optional<double> f_L, f_alpha, f_loss_db, f_modes, f_power, f_watts,
        f_tau, f_nu, f_wavelength, f_start, f_stop, f_radius, f_ncore, f_nclad,
        f_slot_rate;
    std::optional<int> f_K, f_points;
    std::optional<std::string> f_receiver, f_rule, f_var, f_spacing;
    app.add_option("--length-km,-L", f_L, "segment length [km]");
    app.add_option("--segments,-K", f_K, "segment count");
    app.add_option("--alpha", f_alpha, "attenuation [1/km]");
    app.add_option("--loss-db", f_loss_db, "attenuation [dB/km]");
    app.add_option("--receiver", f_receiver, "passive|active");
    app.add_option("--gain-rule", f_rule, "g1|g2");
    app.add_option("--modes,-M", f_modes, "mode count M");
    app.add_option("--power,-P", f_power, "total power [photons/s]");
    app.add_option("--watts", f_watts, "total power [W]");
    app.add_option("--tau", f_tau, "direct channel transmittivity");
    app.add_option("--nu", f_nu, "direct channel noise photons");
    app.add_option("--wavelength", f_wavelength, "carrier wavelength [m]");
    app.add_option("--var", f_var, "sweep variable modes|power|length|segments");
    app.add_option("--start", f_start, "sweep start");
    app.add_option("--stop", f_stop, "sweep stop");
    app.add_option("--points", f_points, "sweep grid points");
    app.add_option("--spacing", f_spacing, "log|linear");
    app.add_option("--radius", f_radius, "fiber core radius [m]");
    app.add_option("--n-core", f_ncore, "core refractive index");
    app.add_option("--n-clad", f_nclad, "cladding refractive index");
    app.add_option("--slot-rate,-B", f_slot_rate, "slot rate B [Hz]");

    auto* sc_capacity = app.add_subcommand("capacity", "single-point capacities");
    auto* sc_sweep = app.add_subcommand("sweep", "parameter sweep table");
    auto* sc_modes = app.add_subcommand("modes", "fiber spatial mode count");
    auto* sc_advantage =
        app.add_subcommand("advantage", "smallest M with ea >= factor * holevo");
    auto* sc_power = app.add_subcommand("power", "amplifier power consumption");
    double factor = 2.0;
    sc_advantage->add_option("--factor", factor, "advantage factor (>= 1)");

    // Global options may appear after the subcommand name.
    for (auto* sc : {sc_capacity, sc_sweep, sc_modes, sc_advantage, sc_power})
        sc->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        RunConfig cfg;
        if (!preset.empty()) apply_preset(cfg, preset);
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in) throw config_error("cannot open config file: " + config_path);
            apply_config_map(cfg, parse_config_text(in));
        }
        if (f_L) cfg.length_km = *f_L;
        if (f_K) cfg.segments = *f_K;
        if (f_alpha) cfg.alpha = *f_alpha;
        if (f_loss_db) cfg.alpha = attenuation_from_db(*f_loss_db);
        if (f_receiver) cfg.receiver = *f_receiver;
        if (f_rule) cfg.gain_rule = *f_rule;
        if (f_modes) cfg.modes = *f_modes;
        if (f_power) { cfg.photons_per_second = *f_power; cfg.watts.reset(); }
        if (f_watts) { cfg.watts = *f_watts; cfg.photons_per_second.reset(); }
        if (f_tau) cfg.tau = *f_tau;
        if (f_nu) cfg.nu = *f_nu;
        if (f_wavelength) cfg.constants.wavelength = *f_wavelength;
        if (f_var) { cfg.sweep_variable = *f_var; cfg.has_sweep = true; }
        if (f_start) { cfg.sweep_start = *f_start; cfg.has_sweep = true; }
        if (f_stop) { cfg.sweep_stop = *f_stop; cfg.has_sweep = true; }
        if (f_points) { cfg.sweep_points = *f_points; cfg.has_sweep = true; }
        if (f_spacing) { cfg.sweep_spacing = *f_spacing; cfg.has_sweep = true; }
        if (f_radius) cfg.core_radius = *f_radius;
        if (f_ncore) cfg.n_core = *f_ncore;
        if (f_nclad) cfg.n_clad = *f_nclad;
        if (f_slot_rate) cfg.slot_rate = *f_slot_rate;
        if (!output_format.empty()) cfg.format = output_format;
        if (!out_path.empty()) cfg.out_path = out_path;
        if (typo_switch) cfg.assume_nu_eff_a_typo = true;

        if (cfg.format != "csv" && cfg.format != "json")
            throw config_error("output.format must be csv or json");

        if (do_dump) {
            std::cout << dump_config(cfg);
            return 0;
        }

        if (sc_capacity->parsed()) return cmd_capacity(cfg);
        if (sc_sweep->parsed()) return cmd_sweep(cfg);
        if (sc_modes->parsed()) return cmd_modes(cfg);
        if (sc_advantage->parsed()) return cmd_advantage(cfg, factor);
        if (sc_power->parsed()) return cmd_power(cfg);
        std::cerr << app.help();
        return 2;
    } catch (const config_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 3;
    } catch (const internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
