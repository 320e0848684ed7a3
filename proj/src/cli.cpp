#include "mollow/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include "mollow/prediction.hpp"

namespace mollow::cli {

using ojson = nlohmann::ordered_json;

std::string format_number(double x) {
    if (!std::isfinite(x)) return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
    if (x == 0.0) return "0";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

double round12(double x) {
    if (!std::isfinite(x) || x == 0.0) return x;
    return std::strtod(format_number(x).c_str(), nullptr);
}

namespace {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Command { spectrum, corrections, table1, scan, peaks };
enum class Format { csv, json };

struct Grid {
    double start = 0, stop = 0;
    int count = 0;
    std::vector<double> points() const {
        std::vector<double> p(count);
        // Mirror-exact for start == -stop.
        const double n = count - 1;
        for (int i = 0; i < count; ++i) p[i] = ((n - i) * start + i * stop) / n;
        return p;
    }
};

struct RunConfig {
    Command command = Command::corrections;
    J j = J::half;
    std::vector<double> h, delta_over_gamma;
    Grid grid{-2.0, 2.0, 401};
    Format format = Format::csv;
    std::optional<std::string> output_path;
    std::optional<std::string> constants_file;
};

double number(const std::string& what, const std::string& s) {
    double v = 0;
    const char* b = s.data();
    const char* e = b + s.size();
    auto [p, ec] = std::from_chars(b, e, v);
    if (ec != std::errc() || p != e) throw ConfigError("bad number for " + what + ": '" + s + "'");
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

Grid parse_grid(const std::string& what, const std::string& s) {
    const auto f = split(s, ':');
    if (f.size() != 3) throw ConfigError(what + ": expected start:stop:count, got '" + s + "'");
    Grid g{number(what, f[0]), number(what, f[1]), 0};
    const double n = number(what, f[2]);
    if (n != std::floor(n) || n < 2 || n > 1e7) throw ConfigError(what + ": count must be an integer >= 2");
    g.count = static_cast<int>(n);
    return g;
}

// Comma list; each item is a number or a start:stop:count grid.
std::vector<double> parse_values(const std::string& what, const std::string& s) {
    std::vector<double> v;
    for (const auto& item : split(s, ',')) {
        if (item.find(':') != std::string::npos) {
            const auto pts = parse_grid(what, item).points();
            v.insert(v.end(), pts.begin(), pts.end());
        } else {
            v.push_back(number(what, item));
        }
    }
    if (v.empty()) throw ConfigError(what + ": no values");
    return v;
}

const std::set<std::string> kKnownKeys = {"alpha",         "Z",
                                          "m_freq",        "c_light",
                                          "e_charge",      "h_planck",
                                          "lamb_1s",       "lamb_2p_half",
                                          "lamb_2p_three_half", "gamma_half",
                                          "gamma_three_half",   "e_hfs"};

struct Inputs {
    PhysicalConstants constants;
    HydrogenData data;
};

Inputs load_inputs(const RunConfig& cfg) {
    Inputs in;
    std::optional<std::string> path = cfg.constants_file;
    if (!path) {
        if (const char* env = std::getenv(kConstantsEnv); env && *env) path = env;
    }
    if (!path) return in;
    try {
        const auto kv = load_key_values(*path);
        for (const auto& [k, v] : kv)
            if (!kKnownKeys.count(k)) throw ConfigError("config: unknown key '" + k + "' in " + *path);
        in.constants = constants_from(kv);
        in.data = hydrogen_data_from(kv);
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        throw ConfigError(e.what());
    }
    return in;
}

// ---- output ----------------------------------------------------------------

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) {
        if (ch == '"') q += '"';
        q += ch;
    }
    return q + "\"";
}

struct Cell {
    std::string text;
    Cell(const char* s) : text(s) {}
    Cell(std::string s) : text(std::move(s)) {}
    Cell(double x) : text(format_number(x)) {}
    Cell(bool b) : text(b ? "true" : "false") {}
};

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<Cell>> rows;

    void write_csv(std::ostream& os) const {
        auto line = [&](const auto& cells, auto&& get) {
            for (size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_field(get(cells[i]));
            os << '\n';
        };
        line(header, [](const std::string& s) { return s; });
        for (const auto& r : rows) line(r, [](const Cell& c) { return c.text; });
    }
};

double r12(double x) { return round12(x); }

ojson uv(const UncertainValue& v) { return {{"value", r12(v.value)}, {"sigma", r12(v.sigma)}}; }

ojson drive_json(const DriveParams& d) {
    return {{"omega_rabi", r12(d.omega_rabi)},
            {"detuning", r12(d.detuning)},
            {"gamma", r12(d.gamma)},
            {"omega_laser", r12(d.omega_laser)}};
}

ojson header_json(const char* command) { return {{"schema_version", kSchemaVersion}, {"command", command}}; }

// Table rows as JSON objects; numeric cells become numbers.
ojson rows_json(const Table& t) {
    ojson rows = ojson::array();
    for (const auto& r : t.rows) {
        ojson o;
        for (size_t i = 0; i < r.size(); ++i) {
            const auto& s = r[i].text;
            double v = 0;
            auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
            if (s == "true" || s == "false")
                o[t.header[i]] = s == "true";
            else if (ec == std::errc() && p == s.data() + s.size())
                o[t.header[i]] = v;
            else
                o[t.header[i]] = s;
        }
        rows.push_back(std::move(o));
    }
    return rows;
}

void emit(const RunConfig& cfg, const char* command, const Table& t, ojson extra, std::ostream& os) {
    if (cfg.format == Format::csv) {
        t.write_csv(os);
        return;
    }
    ojson j = header_json(command);
    for (auto& [k, v] : extra.items()) j[k] = v;
    j["rows"] = rows_json(t);
    os << j.dump(2) << '\n';
}

double single(const std::vector<double>& v, const char* flag) {
    if (v.size() != 1) throw ConfigError(std::string(flag) + ": this command takes a single value");
    return v.front();
}

// ---- commands ----------------------------------------------------------------

void cmd_spectrum(const RunConfig& cfg, const Inputs& in, std::ostream& os) {
    const auto t = transition(cfg.j, in.data);
    const auto d = drive_for(t, single(cfg.h, "--h"), single(cfg.delta_over_gamma, "--delta"), in.constants);
    const double rabi = d.generalized_rabi();
    Table tab{{"offset_rabi", "offset_hz", "s_exact", "s_secular"}, {}};
    for (double u : cfg.grid.points()) {
        const double x = u * rabi;
        tab.rows.push_back({u, x, spectrum_exact_offset<double>(x, d.omega_rabi, d.detuning, d.gamma),
                            spectrum_secular_offset<double>(x, d.omega_rabi, d.detuning, d.gamma)});
    }
    emit(cfg, "spectrum", tab, {{"transition", to_string(cfg.j)}, {"drive", drive_json(d)}}, os);
}

void cmd_corrections(const RunConfig& cfg, const Inputs& in, std::ostream& os) {
    const auto t = transition(cfg.j, in.data);
    const auto d = drive_for(t, single(cfg.h, "--h"), single(cfg.delta_over_gamma, "--delta"), in.constants);
    const auto b = aggregate(t, d, in.constants);
    const auto head = headline_shift(b);
    const std::complex<double> dw = b.D * resonance_frequency(in.constants);

    if (cfg.format == Format::csv) {
        Table tab{{"quantity", "value", "sigma"}, {}};
        for (const auto& ch : b.channels) {
            const auto id = to_string(ch.id);
            tab.rows.push_back({"parameter." + id, ch.parameter.value, ch.parameter.sigma});
            tab.rows.push_back({"shift_plus." + id, ch.shift_plus.value, ch.shift_plus.sigma});
        }
        tab.rows.push_back({"delta_rad", b.delta_rad.value, b.delta_rad.sigma});
        tab.rows.push_back({"omega_hat_rad", b.omega_hat_rad.value, b.omega_hat_rad.sigma});
        tab.rows.push_back({"omega_c", b.omega_c.value, b.omega_c.sigma});
        tab.rows.push_back({"omega_no_c", b.omega_no_c.value, b.omega_no_c.sigma});
        tab.rows.push_back({"bare", b.bare, 0.0});
        tab.rows.push_back({"headline_shift", head.value, head.sigma});
        tab.rows.push_back({"d_omega_r_real", dw.real(), 0.0});
        tab.rows.push_back({"d_omega_r_imag", dw.imag(), 0.0});
        tab.rows.push_back({"ionization", b.ionization, 0.0});
        tab.rows.push_back({"imaginary_width", b.imaginary_width, 0.0});
        tab.write_csv(os);
        return;
    }

    ojson j = header_json("corrections");
    j["transition"] = to_string(cfg.j);
    j["drive"] = drive_json(d);
    ojson chans = ojson::array();
    for (const auto& ch : b.channels) {
        chans.push_back({{"id", to_string(ch.id)},
                         {"kind", ch.kind == ChannelKind::detuning ? "detuning" : "rabi"},
                         {"parameter", uv(ch.parameter)},
                         {"shift_plus", uv(ch.shift_plus)},
                         {"shift_minus", uv(ch.shift_minus())},
                         {"first_order", r12(ch.first_order)},
                         {"in_aggregate", ch.in_aggregate},
                         {"valid", ch.valid}});
    }
    j["channels"] = chans;
    j["delta_rad"] = uv(b.delta_rad);
    j["omega_hat_rad"] = uv(b.omega_hat_rad);
    j["omega_c"] = uv(b.omega_c);
    j["omega_no_c"] = uv(b.omega_no_c);
    j["bare"] = r12(b.bare);
    j["headline_shift"] = uv(head);
    j["d_omega_r"] = {{"real", r12(dw.real())}, {"imag", r12(dw.imag())}};
    j["ionization"] = r12(b.ionization);
    j["imaginary_width"] = r12(b.imaginary_width);
    j["theta_corr"] = r12(b.theta_corr);
    j["metadata"] = {{"omega_c_sigma_method", "quadrature"},
                     {"omega_c_sigma_worst_case", r12(b.omega_c_sigma_worst)},
                     {"first_order_shift", r12(b.first_order_shift)}};
    os << j.dump(2) << '\n';
}

void cmd_table1(const RunConfig& cfg, const Inputs& in, std::ostream& os) {
    const double h = single(cfg.h, "--h"), dg = single(cfg.delta_over_gamma, "--delta");
    Table tab{{"channel", "j", "shift_plus_khz", "sigma_khz", "shift_minus_khz"}, {}};
    for (const auto& r : table_one(h, dg, in.data, in.constants))
        tab.rows.push_back({to_string(r.id), to_string(r.j), r.shift_khz.value, r.shift_khz.sigma, -r.shift_khz.value});
    emit(cfg, "table1", tab, {{"h", r12(h)}, {"delta_over_gamma", r12(dg)}}, os);
}

void cmd_scan(const RunConfig& cfg, const Inputs& in, std::ostream& os) {
    const auto t = transition(cfg.j, in.data);
    Table tab{{"j", "h", "delta_over_gamma", "omega_c", "omega_c_sigma", "shift_plus", "shift_minus",
               "intensity_displacement", "ionization", "ionization_over_omega", "feasible"},
              {}};
    for (double h : cfg.h) {
        for (double dg : cfg.delta_over_gamma) {
            const auto d = drive_for(t, h, dg, in.constants);
            const auto b = aggregate(t, d, in.constants);
            const auto head = headline_shift(b);
            const double disp = b.channel(ChannelId::BS).parameter.value + b.channel(ChannelId::OR).parameter.value;
            const double ratio = b.ionization / d.omega_rabi;
            tab.rows.push_back({to_string(cfg.j), h, dg, b.omega_c.value, b.omega_c.sigma, head.value, -head.value,
                                disp, b.ionization, ratio, ratio < 1e-3});
        }
    }
    emit(cfg, "scan", tab, {{"transition", to_string(cfg.j)}}, os);
}

void cmd_peaks(const RunConfig& cfg, const Inputs& in, std::ostream& os) {
    const auto t = transition(cfg.j, in.data);
    const auto d = drive_for(t, single(cfg.h, "--h"), single(cfg.delta_over_gamma, "--delta"), in.constants);
    const auto num = find_peak_offsets<double>(d.omega_rabi, d.detuning, d.gamma);
    const auto [sp, sm] = sideband_offsets_series<double>(d.omega_rabi, d.detuning, d.gamma);
    const double series[3] = {sp, 0.0, sm};
    const char* names[3] = {"plus", "center", "minus"};
    Table tab{{"peak", "numeric_offset_hz", "series_offset_hz", "difference_hz"}, {}};
    for (int i = 0; i < 3; ++i) tab.rows.push_back({names[i], num[i], series[i], num[i] - series[i]});
    emit(cfg, "peaks", tab, {{"transition", to_string(cfg.j)}, {"drive", drive_json(d)}}, os);
}

void error_record(std::ostream& err, int code, const std::string& message) {
    ojson e = {{"error", {{"code", code},
                          {"kind", code == config_error ? "config_error" : "numeric_failure"},
                          {"message", message}}}};
    err << e.dump() << '\n';
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Mollow sideband predictions for the hydrogen 1S-2P transition", "mollow_cli"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);
    app.set_version_flag("--version", kSchemaVersion);

    std::string j_text = "1/2", h_text, delta_text, grid_text = "-2:2:401", format_text = "csv";
    std::string output_text, constants_text;

    struct Sub {
        CLI::App* app;
        Command cmd;
    };
    std::vector<Sub> subs = {
        {app.add_subcommand("spectrum", "Exact and secular spectrum on an offset grid (units of Omega_R)"),
         Command::spectrum},
        {app.add_subcommand("corrections", "All correction channels and the corrected Rabi frequency"),
         Command::corrections},
        {app.add_subcommand("table1", "Summed sideband shifts of every channel for both transitions"),
         Command::table1},
        {app.add_subcommand("scan", "Corrected Rabi frequency over an (h, Delta/Gamma) grid"), Command::scan},
        {app.add_subcommand("peaks", "Numerical spectrum maxima against the sideband series"), Command::peaks},
    };
    for (auto& s : subs) {
        auto* a = s.app;
        if (s.cmd != Command::table1) a->add_option("--j", j_text, "Upper level: 1/2 or 3/2")->capture_default_str();
        a->add_option("--h", h_text, "Omega/Gamma (scan: comma list or start:stop:count)")->required();
        a->add_option("--delta", delta_text, "Delta/Gamma (scan: comma list or start:stop:count)")->required();
        if (s.cmd == Command::spectrum)
            a->add_option("--grid", grid_text, "start:stop:count in units of Omega_R")->capture_default_str();
        a->add_option("--format", format_text, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}))
            ->capture_default_str();
        a->add_option("--output", output_text, "Write to this file instead of stdout");
        a->add_option("--constants", constants_text,
                      std::string("key=value constants file (default: $") + kConstantsEnv + ")");
    }

    RunConfig cfg;
    try {
        app.parse(argc, argv);
        for (const auto& s : subs)
            if (s.app->parsed()) cfg.command = s.cmd;
        try {
            cfg.j = parse_j(j_text);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what());
        }
        cfg.h = parse_values("--h", h_text);
        cfg.delta_over_gamma = parse_values("--delta", delta_text);
        for (double h : cfg.h)
            if (!(h > 0.0)) throw ConfigError("--h: values must be > 0");
        cfg.grid = parse_grid("--grid", grid_text);
        cfg.format = format_text == "json" ? Format::json : Format::csv;
        if (!output_text.empty()) cfg.output_path = output_text;
        if (!constants_text.empty()) cfg.constants_file = constants_text;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        error_record(err, config_error, e.what());
        return config_error;
    } catch (const ConfigError& e) {
        error_record(err, config_error, e.what());
        return config_error;
    }

    std::ostringstream buf;
    try {
        const Inputs in = load_inputs(cfg);
        switch (cfg.command) {
            case Command::spectrum: cmd_spectrum(cfg, in, buf); break;
            case Command::corrections: cmd_corrections(cfg, in, buf); break;
            case Command::table1: cmd_table1(cfg, in, buf); break;
            case Command::scan: cmd_scan(cfg, in, buf); break;
            case Command::peaks: cmd_peaks(cfg, in, buf); break;
        }
    } catch (const ConfigError& e) {
        error_record(err, config_error, e.what());
        return config_error;
    } catch (const std::invalid_argument& e) {
        error_record(err, config_error, e.what());
        return config_error;
    } catch (const std::exception& e) {
        error_record(err, numeric_failure, e.what());
        return numeric_failure;
    }

    if (cfg.output_path) {
        std::ofstream f(*cfg.output_path, std::ios::binary);
        if (!(f << buf.str())) {
            error_record(err, config_error, "cannot write output file: " + *cfg.output_path);
            return config_error;
        }
    } else {
        out << buf.str();
    }
    return ok;
}

}  // namespace mollow::cli
