// jcsq.cpp: command-line front end. Talks to the library exclusively
// through the public C API, the same way an external consumer would.
#include "jcsqueeze/jcsqueeze.h"

#include "CLI11.hpp"
#include "json.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPiThirds = 2.0943951023931953;

constexpr char kCsvHeader[] =
    "t,F1,F2,Pe,n,re_a,im_a,x1_var,x2_var,uncertainty,min_eig,gamma_minus,gamma_plus,f1,f2";

struct CliError {
    int exit_code;
    std::string message;
};

[[noreturn]] void fail(int code, const std::string& msg) { throw CliError{code, msg}; }

void check(jcsq_status st, const std::string& what) {
    if (st == JCSQ_OK) return;
    fail(st == JCSQ_ERROR_INVALID_ARGUMENT ? 1 : 2, what + ": " + jcsq_last_error());
}

struct RunConfig {
    double lambda = 5.0;
    double coupling = 1.0;
    double omega0 = 10.0;
    double theta = kTwoPiThirds;
    double phi = 0.0;
    double t_max = 20.0;
    int samples_per_fast_period = 40;
    std::string convention = "quarter";
    std::string output = "-";
    bool undamped = false;
};

jcsq_convention convention_of(const std::string& s) {
    if (s == "quarter") return JCSQ_CONVENTION_QUARTER;
    if (s == "unit") return JCSQ_CONVENTION_UNIT;
    fail(1, "unknown convention '" + s + "' (accepted: quarter, unit)");
}

// --- config document -------------------------------------------------

double as_number(const std::string& key, const nlohmann::json& v) {
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        char* end = nullptr;
        const double x = std::strtod(s.c_str(), &end);
        if (!s.empty() && end == s.c_str() + s.size()) return x;
    }
    fail(1, "config key '" + key + "' must be a number");
}

std::string as_string(const std::string& key, const nlohmann::json& v) {
    if (v.is_string()) return v.get<std::string>();
    fail(1, "config key '" + key + "' must be a string");
}

void apply_key(RunConfig& c, const std::string& key, const nlohmann::json& v) {
    if (key == "lambda") {
        c.lambda = as_number(key, v);
    } else if (key == "coupling") {
        c.coupling = as_number(key, v);
    } else if (key == "omega0") {
        c.omega0 = as_number(key, v);
    } else if (key == "theta") {
        c.theta = as_number(key, v);
    } else if (key == "phi") {
        c.phi = as_number(key, v);
    } else if (key == "t_max") {
        c.t_max = as_number(key, v);
    } else if (key == "samples_per_fast_period") {
        const double x = as_number(key, v);
        if (x != std::floor(x) || x < 1 || x > 1e9)
            fail(1, "config key 'samples_per_fast_period' must be a positive integer");
        c.samples_per_fast_period = static_cast<int>(x);
    } else if (key == "convention") {
        c.convention = as_string(key, v);
        convention_of(c.convention);
    } else if (key == "output") {
        c.output = as_string(key, v);
    } else {
        fail(1, "unknown config key '" + key +
                    "' (accepted: lambda, coupling, omega0, theta, phi, t_max, "
                    "samples_per_fast_period, convention, output)");
    }
}

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

void load_config(RunConfig& c, const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(3, "cannot open config file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();

    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(text);
        } catch (const std::exception& e) {
            fail(1, std::string("config JSON parse error: ") + e.what());
        }
        if (!doc.is_object()) fail(1, "config JSON must be an object");
        for (const auto& [key, value] : doc.items()) apply_key(c, key, value);
        return;
    }

    std::istringstream lines(text);
    std::string line;
    int lineno = 0;
    while (std::getline(lines, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            fail(1, "config line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key.empty() || val.empty())
            fail(1, "config line " + std::to_string(lineno) + ": expected key = value");
        char* end = nullptr;
        const double x = std::strtod(val.c_str(), &end);
        if (end == val.c_str() + val.size())
            apply_key(c, key, nlohmann::json(x));
        else
            apply_key(c, key, nlohmann::json(val));
    }
}

// --- output ------------------------------------------------------------

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_output(const std::string& path, const std::string& data) {
    if (path == "-") {
        std::cout << data;
        std::cout.flush();
        if (!std::cout) fail(3, "write to stdout failed");
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(3, "cannot open output file: " + path);
    out << data;
    out.flush();
    if (!out) fail(3, "write failed: " + path);
}

void append_record(std::string& out, const jcsq_record& r) {
    const double cols[15] = {r.t,      r.F1,     r.F2,          r.Pe,      r.mean_n,
                             r.re_a,   r.im_a,   r.x1_var,      r.x2_var,  r.uncertainty,
                             r.min_eig, r.gamma_minus, r.gamma_plus, r.damp_f1, r.damp_f2};
    for (int i = 0; i < 15; ++i) {
        if (i) out += ',';
        out += fmt(cols[i]);
    }
    out += '\n';
}

// --- C API RAII --------------------------------------------------------

struct Model {
    jcsq_model* h = nullptr;
    explicit Model(const RunConfig& c) {
        check(c.undamped ? jcsq_model_create_undamped(c.coupling, c.omega0, &h)
                         : jcsq_model_create(c.lambda, c.coupling, c.omega0, &h),
              "model");
    }
    ~Model() { jcsq_model_destroy(h); }
    Model(const Model&) = delete;
    Model& operator=(const Model&) = delete;
};

struct TrajectoryRun {
    Model model;
    jcsq_state initial{};
    jcsq_trajectory* traj = nullptr;

    explicit TrajectoryRun(const RunConfig& c) : model(c) {
        check(jcsq_initial_state(c.theta, c.phi, &initial), "initial state");
        check(jcsq_trajectory_run(model.h, &initial, c.t_max, c.samples_per_fast_period,
                                  convention_of(c.convention), &traj),
              "trajectory");
    }
    ~TrajectoryRun() { jcsq_trajectory_destroy(traj); }
    TrajectoryRun(const TrajectoryRun&) = delete;
    TrajectoryRun& operator=(const TrajectoryRun&) = delete;

    size_t size() const { return jcsq_trajectory_length(traj); }
    const jcsq_record* records() const { return jcsq_trajectory_records(traj); }
};

struct Envelope {
    jcsq_envelope* h = nullptr;
    Envelope(const Model& m, const TrajectoryRun& run) {
        check(jcsq_envelope_extract(m.h, run.traj, &h), "envelope");
    }
    ~Envelope() { jcsq_envelope_destroy(h); }
    Envelope(const Envelope&) = delete;
    Envelope& operator=(const Envelope&) = delete;
};

// --- timeseries ----------------------------------------------------------

int cmd_timeseries(const RunConfig& c) {
    TrajectoryRun run(c);
    std::string out;
    out.reserve(run.size() * 320 + 128);
    out += kCsvHeader;
    out += '\n';
    for (size_t i = 0; i < run.size(); ++i) append_record(out, run.records()[i]);
    write_output(c.output, out);
    return 0;
}

// --- sweep ---------------------------------------------------------------

struct SweepSpec {
    std::string axis;
    std::vector<double> values;
    std::string reduction = "envelope_summary";
    int threads = 0;
};

void set_axis(RunConfig& c, const std::string& axis, double v) {
    if (axis == "theta")
        c.theta = v;
    else if (axis == "phi")
        c.phi = v;
    else if (axis == "lambda")
        c.lambda = v;
    else if (axis == "coupling")
        c.coupling = v;
    else if (axis == "omega0")
        c.omega0 = v;
    else
        fail(1, "unknown sweep axis '" + axis +
                    "' (accepted: theta, phi, lambda, coupling, omega0)");
}

std::string sweep_chunk(const RunConfig& base, const SweepSpec& spec, double v) {
    RunConfig c = base;
    set_axis(c, spec.axis, v);
    TrajectoryRun run(c);
    std::string out;
    if (spec.reduction == "full_trajectory") {
        out.reserve(run.size() * 340);
        for (size_t i = 0; i < run.size(); ++i) {
            out += fmt(v);
            out += ',';
            append_record(out, run.records()[i]);
        }
        return out;
    }
    Envelope env(run.model, run);
    size_t n_lower = 0, n_col = 0, n_rev = 0;
    const double* lower = jcsq_envelope_lower(env.h, &n_lower);
    jcsq_envelope_collapse_times(env.h, &n_col);
    jcsq_envelope_revival_times(env.h, &n_rev);
    // The sliding minimum is flat for a window around the deepest sample;
    // report the plateau centre, which is where that sample sits.
    double env_min = 0.0, env_min_t = 0.0;
    size_t i_min = n_lower;
    for (size_t i = 0; i < n_lower; ++i) {
        if (lower[i] < env_min) {
            env_min = lower[i];
            i_min = i;
        }
    }
    if (i_min < n_lower) {
        size_t last = i_min;
        while (last + 1 < n_lower && lower[last + 1] == env_min) ++last;
        env_min_t = run.records()[i_min + (last - i_min) / 2].t;
    }
    const double cols[7] = {v,
                            env_min,
                            env_min_t,
                            static_cast<double>(n_col),
                            static_cast<double>(n_rev),
                            jcsq_envelope_period(env.h),
                            jcsq_envelope_fast_frequency(env.h)};
    for (int i = 0; i < 7; ++i) {
        if (i) out += ',';
        out += fmt(cols[i]);
    }
    out += '\n';
    return out;
}

int cmd_sweep(const RunConfig& base, const SweepSpec& spec) {
    if (spec.reduction != "full_trajectory" && spec.reduction != "envelope_summary")
        fail(1, "unknown reduction '" + spec.reduction +
                    "' (accepted: full_trajectory, envelope_summary)");
    if (spec.values.empty()) fail(1, "sweep has no grid points");

    const int n = static_cast<int>(spec.values.size());
    std::vector<std::string> chunks(n);
    int threads = spec.threads > 0
                      ? spec.threads
                      : static_cast<int>(std::thread::hardware_concurrency());
    threads = std::clamp(threads, 1, n);

    // Grid points run independently; chunks are assembled in grid order, so
    // output bytes do not depend on the execution schedule.
    std::atomic<int> cursor{0};
    std::mutex err_mu;
    std::optional<CliError> first_error;
    auto worker = [&] {
        for (;;) {
            const int i = cursor.fetch_add(1);
            if (i >= n) return;
            try {
                chunks[i] = sweep_chunk(base, spec, spec.values[i]);
            } catch (const CliError& e) {
                std::lock_guard<std::mutex> lock(err_mu);
                if (!first_error) first_error = e;
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (first_error) throw *first_error;

    std::string out = spec.axis;
    if (spec.reduction == "full_trajectory") {
        out += ',';
        out += kCsvHeader;
    } else {
        out += ",env_min,env_min_t,collapse_count,revival_count,revival_period,"
               "fast_frequency";
    }
    out += '\n';
    for (const auto& ch : chunks) out += ch;
    write_output(base.output, out);
    return 0;
}

// --- verify ----------------------------------------------------------------

int cmd_verify(const RunConfig& c) {
    Model m(c);
    jcsq_verify_report rep{};
    check(jcsq_verify_run(m.h, c.theta, c.phi, c.t_max, &rep), "verify");
    nlohmann::json j;
    j["max_ode_dev"] = rep.max_ode_dev;
    j["max_rate_dev"] = rep.max_rate_dev;
    j["trace_drift"] = rep.trace_drift;
    j["min_eig"] = rep.min_eig;
    write_output(c.output, j.dump(2) + "\n");
    if (!rep.gates_passed) {
        std::cerr << "verify: gates failed (max_ode_dev=" << rep.max_ode_dev
                  << ", max_rate_dev=" << rep.max_rate_dev
                  << ", trace_drift=" << rep.trace_drift << ", min_eig=" << rep.min_eig
                  << ")\n";
        return 2;
    }
    return 0;
}

// --- figures -----------------------------------------------------------------

struct FigureDef {
    std::string id;
    RunConfig cfg;            // unit convention, preset parameters
    std::string slice_axis;   // empty for single-trajectory figures
    std::vector<double> slice_values;
};

std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = a + (b - a) * i / (n - 1.0);
    return v;
}

FigureDef figure_def(const std::string& id) {
    FigureDef d;
    d.id = id;
    d.cfg.convention = "unit";
    if (id == "fig1a") {
        d.slice_axis = "phi";
        d.slice_values = linspace(0.0, 2.0 * kPi, 33);
    } else if (id == "fig1b") {
        d.slice_axis = "theta";
        d.slice_values = linspace(0.0, kPi, 33);
    } else if (id == "fig2a") {
        // defaults already match
    } else if (id == "fig2b") {
        d.cfg.coupling = 2.0;
    } else if (id == "fig3a") {
        d.cfg.lambda = 3.0;
    } else if (id == "fig3b") {
        d.cfg.lambda = 0.3;
    } else if (id == "fig3c") {
        d.cfg.lambda = 0.03;
        d.cfg.t_max = 60.0;
    } else if (id == "fig4a") {
        d.cfg.lambda = 0.01;
        d.cfg.omega0 = 5.0;
    } else if (id == "fig4b") {
        d.cfg.lambda = 0.01;
        d.cfg.omega0 = 10.0;
    } else {
        fail(1, "unknown figure id '" + id +
                    "' (accepted: fig1a, fig1b, fig2a, fig2b, fig3a, fig3b, fig3c, "
                    "fig4a, fig4b)");
    }
    return d;
}

// Phase-floor envelope column for every sample of a run.
std::vector<double> envelope_column(const TrajectoryRun& run, const RunConfig& c) {
    std::vector<double> env(run.size());
    for (size_t i = 0; i < run.size(); ++i) {
        check(jcsq_envelope_f1(run.model.h, &run.initial, run.records()[i].t,
                               convention_of(c.convention), &env[i]),
              "envelope column");
    }
    return env;
}

std::string gnuplot_single(const FigureDef& d) {
    std::ostringstream os;
    os << "# " << d.id << ": squeezing factor with envelope and excited population\n"
       << "set datafile separator ','\n"
       << "set xlabel 'gamma0*t'\n"
       << "set ylabel 'F1'\n"
       << "set key top right\n"
       << "plot '" << d.id << ".csv' skip 1 using 1:2 with lines lc rgb 'black' title 'F1', \\\n"
       << "     '" << d.id << ".csv' skip 1 using 1:16 with lines dashtype 2 lc rgb 'red' title 'envelope', \\\n"
       << "     '" << d.id << ".csv' skip 1 using 1:4 with lines dashtype 4 lc rgb 'blue' title 'Pe'\n"
       << "pause -1\n";
    return os.str();
}

std::string gnuplot_slices(const FigureDef& d) {
    // A few representative slices picked from the grid.
    const std::vector<int> picks = {0, 8, 16, 24};
    std::ostringstream os;
    os << "# " << d.id << ": F1 traces for selected " << d.slice_axis << " values\n"
       << "set datafile separator ','\n"
       << "set xlabel 'gamma0*t'\n"
       << "set ylabel 'F1'\n"
       << "set key top right\n"
       << "plot ";
    bool first = true;
    for (int i : picks) {
        const double v = d.slice_values[i];
        if (!first) os << ", \\\n     ";
        first = false;
        os << "'" << d.id << ".csv' skip 1 using (abs($1-(" << fmt(v)
           << "))<1e-9 ? $2 : 1/0):3 with lines title '" << d.slice_axis << "="
           << fmt(v) << "'";
    }
    os << ", \\\n     '" << d.id << ".csv' skip 1 using (abs($1-(" << fmt(d.slice_values[0])
       << "))<1e-9 ? $2 : 1/0):4 with lines dashtype 2 lc rgb 'red' title 'envelope'\n"
       << "pause -1\n";
    return os.str();
}

int cmd_figures(const std::vector<std::string>& ids, const std::string& outdir) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(outdir, ec);
    if (ec) fail(3, "cannot create output directory: " + outdir);

    for (const auto& id : ids) {
        FigureDef d = figure_def(id);
        std::string csv;
        std::string script;
        if (d.slice_axis.empty()) {
            TrajectoryRun run(d.cfg);
            const auto env = envelope_column(run, d.cfg);
            csv.reserve(run.size() * 340 + 128);
            csv += kCsvHeader;
            csv += ",F1_env\n";
            for (size_t i = 0; i < run.size(); ++i) {
                append_record(csv, run.records()[i]);
                csv.back() = ',';  // replace newline, append envelope column
                csv += fmt(env[i]);
                csv += '\n';
            }
            script = gnuplot_single(d);
        } else {
            csv += d.slice_axis;
            csv += ",t,F1,F1_env\n";
            for (double v : d.slice_values) {
                RunConfig c = d.cfg;
                // The grid closes at 2*pi for phi; the state is built from the
                // phase reduced into [0, 2*pi).
                double call_v = v;
                if (d.slice_axis == "phi" && call_v >= 2.0 * kPi) call_v -= 2.0 * kPi;
                set_axis(c, d.slice_axis, call_v);
                TrajectoryRun run(c);
                const auto env = envelope_column(run, c);
                for (size_t i = 0; i < run.size(); ++i) {
                    csv += fmt(v);
                    csv += ',';
                    csv += fmt(run.records()[i].t);
                    csv += ',';
                    csv += fmt(run.records()[i].F1);
                    csv += ',';
                    csv += fmt(env[i]);
                    csv += '\n';
                }
            }
            script = gnuplot_slices(d);
        }
        const fs::path csv_path = fs::path(outdir) / (id + ".csv");
        const fs::path gp_path = fs::path(outdir) / (id + ".gnuplot");
        write_output(csv_path.string(), csv);
        write_output(gp_path.string(), script);
        std::cerr << "wrote " << csv_path.string() << " and " << gp_path.string() << "\n";
    }
    return 0;
}

// --- flag plumbing -------------------------------------------------------------

struct Flags {
    std::string config;
    double lambda = std::nan("");
    double coupling = std::nan("");
    double omega0 = std::nan("");
    double theta = std::nan("");
    double phi = std::nan("");
    double t_max = std::nan("");
    int samples = -1;
    std::string convention;
    std::string out;
    bool undamped = false;
};

void add_common(CLI::App* sub, Flags& f) {
    sub->add_option("--config", f.config, "configuration file (key = value or JSON)");
    sub->add_option("--lambda", f.lambda, "reservoir memory bandwidth");
    sub->add_option("--coupling", f.coupling, "vacuum Rabi frequency");
    sub->add_option("--omega0", f.omega0, "bare transition frequency");
    sub->add_option("--theta", f.theta, "initial Bloch angle, [0, pi]");
    sub->add_option("--phi", f.phi, "initial Bloch phase, [0, 2*pi)");
    sub->add_option("--t-max", f.t_max, "trajectory length in units of 1/gamma0");
    sub->add_option("--samples-per-fast-period", f.samples,
                    "samples per optical period (>= 40)");
    sub->add_option("--convention", f.convention, "quarter or unit");
    sub->add_option("--out", f.out, "output path ('-' for stdout)");
    sub->add_flag("--undamped", f.undamped, "zero both decay rates");
}

RunConfig merge(const Flags& f) {
    RunConfig c;
    if (!f.config.empty()) load_config(c, f.config);
    if (!std::isnan(f.lambda)) c.lambda = f.lambda;
    if (!std::isnan(f.coupling)) c.coupling = f.coupling;
    if (!std::isnan(f.omega0)) c.omega0 = f.omega0;
    if (!std::isnan(f.theta)) c.theta = f.theta;
    if (!std::isnan(f.phi)) c.phi = f.phi;
    if (!std::isnan(f.t_max)) c.t_max = f.t_max;
    if (f.samples >= 0) c.samples_per_fast_period = f.samples;
    if (!f.convention.empty()) {
        convention_of(f.convention);
        c.convention = f.convention;
    }
    if (!f.out.empty()) c.output = f.out;
    if (f.undamped) c.undamped = true;
    return c;
}

std::vector<double> parse_values(const std::string& csv) {
    std::vector<double> out;
    std::istringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) fail(1, "--values contains an empty entry");
        char* end = nullptr;
        const double x = std::strtod(item.c_str(), &end);
        if (end != item.c_str() + item.size())
            fail(1, "--values entry is not a number: '" + item + "'");
        out.push_back(x);
    }
    if (out.empty()) fail(1, "--values is empty");
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"transient cavity-field squeezing: time series, sweeps, checks, figures"};
    app.require_subcommand(1);

    Flags flags;

    auto* ts = app.add_subcommand("timeseries", "sample one trajectory to CSV");
    add_common(ts, flags);

    auto* sw = app.add_subcommand("sweep", "run a parameter sweep");
    add_common(sw, flags);
    std::string axis, values_csv, reduction = "envelope_summary";
    double from = 0.0, to = 0.0;
    int count = 0, threads = 0;
    sw->add_option("--axis", axis, "theta, phi, lambda, coupling or omega0")->required();
    auto* values_opt = sw->add_option("--values", values_csv, "explicit grid: v1,v2,...");
    auto* from_opt = sw->add_option("--from", from, "linear grid start");
    auto* to_opt = sw->add_option("--to", to, "linear grid stop");
    auto* count_opt = sw->add_option("--count", count, "linear grid size");
    sw->add_option("--reduction", reduction, "full_trajectory or envelope_summary");
    sw->add_option("--threads", threads, "worker threads (default: hardware)");

    auto* vf = app.add_subcommand("verify", "cross-check closed forms, emit JSON report");
    add_common(vf, flags);

    // Figure recipes are fixed; only the ids and the output directory vary.
    auto* fg = app.add_subcommand("figures", "emit figure datasets and plot scripts");
    std::vector<std::string> fig_ids;
    std::string outdir = ".";
    fg->add_option("ids", fig_ids, "figure ids (fig1a ... fig4b)")->required();
    fg->add_option("--outdir", outdir, "directory for dataset and script files");

    try {
        app.parse(argc, argv);

        const RunConfig cfg = merge(flags);
        if (ts->parsed()) return cmd_timeseries(cfg);
        if (sw->parsed()) {
            SweepSpec spec;
            spec.axis = axis;
            spec.reduction = reduction;
            spec.threads = threads;
            const bool has_linear = from_opt->count() || to_opt->count() || count_opt->count();
            if (values_opt->count() && has_linear)
                fail(1, "--values and --from/--to/--count are mutually exclusive");
            if (values_opt->count()) {
                spec.values = parse_values(values_csv);
            } else if (has_linear) {
                if (!from_opt->count() || !to_opt->count() || !count_opt->count())
                    fail(1, "linear grid needs all of --from, --to, --count");
                if (count < 1) fail(1, "--count must be >= 1");
                spec.values = count == 1 ? std::vector<double>{from}
                                         : linspace(from, to, count);
            } else {
                fail(1, "sweep needs --values or --from/--to/--count");
            }
            return cmd_sweep(cfg, spec);
        }
        if (vf->parsed()) return cmd_verify(cfg);
        if (fg->parsed()) return cmd_figures(fig_ids, outdir);
        return 1;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.exit_code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
