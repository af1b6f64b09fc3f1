// pijq — command-line front end: scenario configuration, execution,
// CSV/JSON output, and reproducible run manifests.

#include <cmath>
#include <complex>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <iostream>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pijq/bath.hpp"
#include "pijq/dephasing.hpp"
#include "pijq/io.hpp"
#include "pijq/ising.hpp"
#include "pijq/modes.hpp"
#include "pijq/rg.hpp"
#include "pijq/rtn.hpp"
#include "pijq/wire.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr const char* kToolVersion = "1.0.0";
constexpr int kManifestSchemaVersion = 1;

// Deterministic timestamps: SOURCE_DATE_EPOCH when set, epoch otherwise, so
// that (config, seed, version) fully determines every output byte.
std::string deterministic_timestamp() {
    long long epoch = 0;
    if (const char* e = std::getenv("SOURCE_DATE_EPOCH")) {
        epoch = std::atoll(e);
    }
    std::time_t t = static_cast<std::time_t>(epoch);
    std::tm tm_utc{};
    gmtime_r(&t, &tm_utc);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buf;
}

struct RunContext {
    fs::path output_dir;
    std::string command;
    json config_echo = json::object();
    json extras = json::object();
    std::vector<fs::path> output_files;

    void write(const std::string& name, const std::string& content) {
        fs::create_directories(output_dir);
        fs::path p = output_dir / name;
        pijq::write_text_file(p, content);
        output_files.push_back(p);
    }

    void write_manifest() const {
        json manifest;
        manifest["schema_version"] = kManifestSchemaVersion;
        manifest["tool_version"] = kToolVersion;
        manifest["command"] = command;
        manifest["config"] = config_echo;
        manifest["started"] = deterministic_timestamp();
        manifest["finished"] = deterministic_timestamp();
        json files = json::array();
        for (const auto& p : output_files) {
            files.push_back({{"path", p.filename().string()},
                             {"digest", pijq::fnv1a_digest(pijq::read_text_file(p))}});
        }
        manifest["output_files"] = files;
        if (!extras.empty()) manifest["results"] = extras;
        fs::create_directories(output_dir);
        pijq::write_text_file(output_dir / "manifest.json", manifest.dump(2) + "\n");
    }
};

// ---- wire option bundle ----------------------------------------------------

struct WireOptions {
    std::string profile = "short";
    int n = 40;
    double gamma = 1.0;
    double t = 0.5;
    double upsilon = 0.2;
    double mu = 0.2;
    int normal_length = 4;
    double normal_hopping = 1.0;
};

void add_wire_options(CLI::App* cmd, WireOptions& w) {
    cmd->add_option("--profile", w.profile, "wire profile: uniform, short, long")
        ->check(CLI::IsMember({"uniform", "short", "long"}))
        ->capture_default_str();
    cmd->add_option("--N", w.n, "number of sites (even, >= 4)")->capture_default_str();
    cmd->add_option("--gamma", w.gamma, "bulk pairing")->capture_default_str();
    cmd->add_option("--t", w.t, "junction hopping")->capture_default_str();
    cmd->add_option("--upsilon", w.upsilon, "junction transition pairing")->capture_default_str();
    cmd->add_option("--mu", w.mu, "chemical potential")->capture_default_str();
    cmd->add_option("--normal-length", w.normal_length, "long junction: normal-region bonds")
        ->capture_default_str();
    cmd->add_option("--normal-hopping", w.normal_hopping, "long junction: normal-region hopping")
        ->capture_default_str();
}

pijq::WireParameters build_wire(const WireOptions& w) {
    if (w.profile == "uniform") {
        return pijq::build_uniform_kitaev(w.n, 1.0, w.gamma, w.mu);
    }
    pijq::JunctionProfile profile;
    profile.kind = (w.profile == "short") ? pijq::JunctionKind::ShortJunction
                                          : pijq::JunctionKind::LongJunction;
    profile.gamma = w.gamma;
    profile.tunneling = w.t;
    profile.upsilon = w.upsilon;
    profile.normal_length = w.normal_length;
    profile.normal_hopping = w.normal_hopping;
    return pijq::build_pi_junction(w.n, profile, w.mu);
}

json wire_echo(const WireOptions& w) {
    return {{"profile", w.profile},         {"N", w.n},
            {"gamma", w.gamma},             {"t", w.t},
            {"upsilon", w.upsilon},         {"mu", w.mu},
            {"normal_length", w.normal_length}, {"normal_hopping", w.normal_hopping}};
}

std::string sector_name(pijq::ZeroModeSector s) {
    return s == pijq::ZeroModeSector::EtaSector ? "eta" : "nu";
}

std::string symmetry_name(pijq::ZeroModeSymmetry s) {
    switch (s) {
        case pijq::ZeroModeSymmetry::Symmetric: return "symmetric";
        case pijq::ZeroModeSymmetry::Antisymmetric: return "antisymmetric";
        case pijq::ZeroModeSymmetry::EdgeLeft: return "edge_left";
        case pijq::ZeroModeSymmetry::EdgeRight: return "edge_right";
        default: return "unclassified";
    }
}

[[noreturn]] void module_error(const std::string& module, const std::string& context,
                               const std::exception& e) {
    throw std::runtime_error("[" + module + "] " + context + ": " + e.what());
}

// ---- commands ---------------------------------------------------------------

void run_spectrum(RunContext& ctx, const WireOptions& w) {
    ctx.config_echo = wire_echo(w);
    pijq::ModeSet modes;
    try {
        modes = pijq::solve_modes(pijq::assemble_m(build_wire(w)));
    } catch (const std::exception& e) {
        module_error("mode_solver", "spectrum profile=" + w.profile, e);
    }
    pijq::CsvTable csv;
    csv.header = {"level", "lambda"};
    for (std::size_t k = 0; k < modes.levels.size(); ++k) {
        csv.add_row({std::to_string(k), pijq::format_double(modes.levels[k].lambda)});
    }
    ctx.write("spectrum.csv", csv.to_string());
    ctx.extras["zero_mode_count"] = modes.zero_mode_count(pijq::kZeroTolerance);
}

void run_zero_modes(RunContext& ctx, const WireOptions& w) {
    ctx.config_echo = wire_echo(w);
    std::vector<pijq::ZeroMode> zm;
    pijq::ModeSet modes;
    try {
        auto wire = build_wire(w);
        zm = pijq::zero_modes_by_recursion(wire);
        modes = pijq::solve_modes(pijq::assemble_m(wire));
    } catch (const std::exception& e) {
        module_error("mode_solver", "zero-modes profile=" + w.profile, e);
    }
    pijq::CsvTable csv;
    csv.header = {"mode", "sector", "symmetry", "residual", "site", "value"};
    for (std::size_t k = 0; k < zm.size(); ++k) {
        for (int i = 0; i < zm[k].profile.size(); ++i) {
            csv.add_row({std::to_string(k), sector_name(zm[k].sector),
                         symmetry_name(zm[k].symmetry), pijq::format_double(zm[k].energy_residual),
                         std::to_string(zm[k].first_site + i),
                         pijq::format_double(zm[k].profile(i))});
        }
    }
    ctx.write("zero_modes.csv", csv.to_string());
    ctx.extras["zero_mode_count"] = modes.zero_mode_count(pijq::kZeroTolerance);
    ctx.extras["recursion_mode_count"] = zm.size();
}

struct DephaseOptions {
    double s = 1.0, lambda = 1.0, omega_uc = 1.0;
    double t_min = 0.1, t_max = 100.0;
    int points = 64;
    std::string method = "closed";
};

void run_dephase(RunContext& ctx, const DephaseOptions& o) {
    ctx.config_echo = {{"s", o.s},         {"lambda", o.lambda}, {"omega_uc", o.omega_uc},
                       {"t_min", o.t_min}, {"t_max", o.t_max},   {"points", o.points},
                       {"method", o.method}};
    pijq::BathSpec spec{o.s, o.lambda, 1.0, o.omega_uc};
    std::vector<double> times(o.points);
    for (int i = 0; i < o.points; ++i) {
        double f = (o.points == 1) ? 0.0 : static_cast<double>(i) / (o.points - 1);
        times[i] = o.t_min * std::pow(o.t_max / o.t_min, f);
    }
    try {
        spec.validate();
        pijq::CsvTable csv;
        csv.header = {"t", "re_I", "im_I", "abs_I"};
        bool both = o.method == "both";
        if (both) csv.header.insert(csv.header.end(), {"re_I_quad", "im_I_quad"});
        auto method = (o.method == "quadrature") ? pijq::CurveMethod::Quadrature
                                                 : pijq::CurveMethod::ClosedForm;
        auto curve = pijq::decoherence_curve(spec, times, method);
        for (std::size_t i = 0; i < times.size(); ++i) {
            std::vector<std::string> row = {
                pijq::format_double(times[i]), pijq::format_double(curve.values[i].real()),
                pijq::format_double(curve.values[i].imag()),
                pijq::format_double(std::abs(curve.values[i]))};
            if (both) {
                auto q = pijq::decoherence_quadrature(spec, times[i]);
                row.push_back(pijq::format_double(q.real()));
                row.push_back(pijq::format_double(q.imag()));
            }
            csv.add_row(row);
        }
        ctx.write("dephase.csv", csv.to_string());
    } catch (const std::exception& e) {
        module_error("dephasing_dynamics", "dephase s=" + pijq::format_double(o.s), e);
    }
}

struct IsingOptions {
    std::string variant = "dephasing";
    double s = 1.0, lambda = 0.5, omega_uc = 1.0, dtau = 0.5;
    int l = 8;
};

void run_ising(RunContext& ctx, const IsingOptions& o) {
    ctx.config_echo = {{"variant", o.variant}, {"s", o.s},       {"lambda", o.lambda},
                       {"omega_uc", o.omega_uc}, {"L", o.l},     {"dtau", o.dtau}};
    pijq::KernelSpec kernel;
    kernel.variant = (o.variant == "dephasing") ? pijq::KernelVariant::PureDephasing
                     : (o.variant == "frustrated-ohmic") ? pijq::KernelVariant::FrustratedOhmic
                                                         : pijq::KernelVariant::FrustratedSubOhmic;
    kernel.spec = pijq::BathSpec{o.s, o.lambda, 1.0, o.omega_uc};
    try {
        kernel.validate();
        auto instance = pijq::build_instance(kernel, o.l, o.dtau);
        auto result = pijq::enumerate_partition(instance);
        pijq::CsvTable csv;
        csv.header = {"r", "correlation", "magnetization"};
        for (std::size_t r = 0; r < result.correlations.size(); ++r) {
            csv.add_row({std::to_string(r), pijq::format_double(result.correlations[r]),
                         pijq::format_double(result.magnetizations[r])});
        }
        ctx.write("ising.csv", csv.to_string());
        ctx.extras["z_ratio"] = result.z_ratio;
        auto tendency = pijq::ferro_para_diagnostic(kernel);
        ctx.extras["tendency"] =
            tendency == pijq::PhaseTendency::FerromagneticTendency ? "ferromagnetic"
            : tendency == pijq::PhaseTendency::ParamagneticTendency ? "paramagnetic"
                                                                    : "marginal";
        double exponent = pijq::kernel_decay_exponent(kernel);
        ctx.extras["decay_exponent"] = std::isinf(exponent) ? json("infinity") : json(exponent);
    } catch (const std::exception& e) {
        module_error("ising_map", "ising variant=" + o.variant, e);
    }
}

struct RGOptions {
    double s = 1.0, lambda0 = 0.1, ell_max = 10.0, step = 0.01;
    std::string method = "rk4";
};

void run_rg(RunContext& ctx, const RGOptions& o) {
    ctx.config_echo = {{"s", o.s},           {"lambda0", o.lambda0}, {"ell_max", o.ell_max},
                       {"step", o.step},     {"method", o.method}};
    try {
        pijq::RGTrajectory traj =
            (o.method == "closed")
                ? pijq::closed_form_trajectory(o.lambda0, o.s, o.ell_max, o.step)
                : pijq::integrate_flow(o.lambda0, o.s, o.ell_max, o.step);
        pijq::CsvTable csv;
        csv.header = {"ell", "lambda", "lambda_closed_form"};
        for (const auto& [ell, lam] : traj.samples) {
            csv.add_row({pijq::format_double(ell), pijq::format_double(lam),
                         pijq::format_double(pijq::closed_form_lambda(o.lambda0, o.s, ell))});
        }
        ctx.write("rg.csv", csv.to_string());
        ctx.extras["terminal_lambda"] = traj.terminal_lambda();
        auto phase = pijq::classify_phase(o.s, o.lambda0);
        ctx.extras["phase"] = pijq::phase_name(phase.label);
        ctx.extras["entropy_class"] = pijq::entropy_name(phase.entropy_class);
    } catch (const std::exception& e) {
        module_error("rg_flow", "rg s=" + pijq::format_double(o.s), e);
    }
}

struct RTNOptions {
    int n_fluctuators = 100;
    double rate_min = 1e-3, rate_max = 1e1, amplitude = 1.0;
    std::uint64_t seed = 1;
    double t_max = 4096.0, dt = 0.25;
    int segments = 8;
};

void run_rtn(RunContext& ctx, const RTNOptions& o) {
    ctx.config_echo = {{"n_fluctuators", o.n_fluctuators}, {"rate_min", o.rate_min},
                       {"rate_max", o.rate_max},           {"amplitude", o.amplitude},
                       {"seed", o.seed},                   {"t_max", o.t_max},
                       {"dt", o.dt},                       {"segments", o.segments}};
    try {
        auto ensemble = pijq::make_log_uniform_ensemble(o.n_fluctuators, o.rate_min, o.rate_max,
                                                        o.amplitude, o.seed);
        auto traj = pijq::simulate_rtn(ensemble, o.t_max, o.dt);
        auto psd = pijq::psd_estimate(traj.samples, o.dt, o.segments);
        pijq::CsvTable csv;
        csv.header = {"omega", "power"};
        for (const auto& p : psd) {
            csv.add_row({pijq::format_double(p.omega), pijq::format_double(p.power)});
        }
        ctx.write("rtn_psd.csv", csv.to_string());
        ctx.extras["dt_under_resolved"] = traj.dt_under_resolved;
        if (psd.size() > 8) {
            double lo = 10.0 * o.rate_min, hi = 0.1 * o.rate_max;
            if (lo < hi) ctx.extras["log_slope"] = pijq::psd_log_slope(psd, lo, hi);
        }
    } catch (const std::exception& e) {
        module_error("rtn_noise", "rtn seed=" + std::to_string(o.seed), e);
    }
}

struct SweepOptions {
    std::string target = "rg";
    // rg grid
    std::vector<double> s_grid;           // lo hi step
    std::vector<double> lambda0_list;
    double ell_max = 40.0, step = 0.01;
    // edge-splitting grid
    std::vector<int> n_list;
    WireOptions wire;
    int max_points = 10000;
};

int run_sweep(RunContext& ctx, const SweepOptions& o) {
    int failures = 0;
    ctx.config_echo = {{"target", o.target}, {"max_points", o.max_points}};
    if (o.target == "rg") {
        if (o.s_grid.size() != 3 || o.lambda0_list.empty()) {
            throw CLI::ValidationError("sweep", "rg sweep needs --s-grid LO HI STEP and --lambda0");
        }
        double lo = o.s_grid[0], hi = o.s_grid[1], st = o.s_grid[2];
        if (st <= 0 || hi < lo) throw CLI::ValidationError("sweep", "unbounded or empty s grid");
        std::vector<double> s_values;
        for (double s = lo; s <= hi + 1e-12; s += st) s_values.push_back(s);
        if (s_values.empty()) throw CLI::ValidationError("sweep", "empty grid");
        long total = static_cast<long>(s_values.size()) * o.lambda0_list.size();
        if (total > o.max_points) throw CLI::ValidationError("sweep", "grid exceeds --max-points");
        ctx.config_echo["s_grid"] = o.s_grid;
        ctx.config_echo["lambda0"] = o.lambda0_list;
        ctx.config_echo["ell_max"] = o.ell_max;
        pijq::CsvTable csv;
        csv.header = {"s", "lambda0", "terminal_lambda", "phase", "entropy_class", "status"};
        for (double s : s_values) {
            for (double l0 : o.lambda0_list) {
                try {
                    auto traj = pijq::integrate_flow(l0, s, o.ell_max, o.step);
                    auto phase = pijq::classify_phase(s, l0);
                    csv.add_row({pijq::format_double(s), pijq::format_double(l0),
                                 pijq::format_double(traj.terminal_lambda()),
                                 pijq::phase_name(phase.label),
                                 pijq::entropy_name(phase.entropy_class), "ok"});
                } catch (const std::exception& e) {
                    ++failures;
                    csv.add_row({pijq::format_double(s), pijq::format_double(l0), "", "", "",
                                 std::string("error: ") + e.what()});
                }
            }
        }
        ctx.write("sweep.csv", csv.to_string());
    } else {  // edge-splitting
        if (o.n_list.empty()) throw CLI::ValidationError("sweep", "empty grid: --N-list required");
        if (static_cast<int>(o.n_list.size()) > o.max_points) {
            throw CLI::ValidationError("sweep", "grid exceeds --max-points");
        }
        ctx.config_echo["N_list"] = o.n_list;
        ctx.config_echo["wire"] = wire_echo(o.wire);
        pijq::JunctionProfile profile;
        profile.kind = pijq::JunctionKind::ShortJunction;
        profile.gamma = o.wire.gamma;
        profile.tunneling = o.wire.t;
        profile.upsilon = o.wire.upsilon;
        pijq::CsvTable csv;
        csv.header = {"N", "min_edge_lambda", "status"};
        std::vector<double> xs, ys;
        try {
            auto scan = pijq::edge_splitting_scan(profile, o.wire.mu, o.n_list);
            for (const auto& pt : scan) {
                csv.add_row({std::to_string(pt.n_sites),
                             pijq::format_double(pt.min_edge_lambda), "ok"});
                if (pt.min_edge_lambda > 0) {
                    xs.push_back(pt.n_sites);
                    ys.push_back(std::log(pt.min_edge_lambda));
                }
            }
        } catch (const std::exception& e) {
            module_error("mode_solver", "edge-splitting sweep", e);
        }
        if (xs.size() >= 2) {
            double n = xs.size(), sx = 0, sy = 0, sxx = 0, sxy = 0;
            for (std::size_t i = 0; i < xs.size(); ++i) {
                sx += xs[i]; sy += ys[i]; sxx += xs[i] * xs[i]; sxy += xs[i] * ys[i];
            }
            ctx.extras["log_splitting_slope"] = (n * sxy - sx * sy) / (n * sxx - sx * sx);
        }
        ctx.write("sweep.csv", csv.to_string());
    }
    ctx.extras["failed_points"] = failures;
    return failures;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pijq: Majorana pi-junction wires, dephasing baths, and noise toolkit"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);
    app.set_config("--config", "", "flat key-value config file; [section] per command");

    std::string output_dir = ".";
    const char* env_dir = std::getenv("PIJQ_OUTPUT_DIR");
    if (env_dir != nullptr && *env_dir != '\0') output_dir = env_dir;
    app.add_option("--output-dir", output_dir, "output directory (env PIJQ_OUTPUT_DIR)")
        ->capture_default_str();

    WireOptions wire_spec, wire_zero;
    auto* spectrum = app.add_subcommand("spectrum", "full singular-value spectrum of a wire");
    add_wire_options(spectrum, wire_spec);
    auto* zero_modes = app.add_subcommand("zero-modes", "Majorana zero-mode profiles");
    add_wire_options(zero_modes, wire_zero);

    DephaseOptions dephase_opts;
    auto* dephase = app.add_subcommand("dephase", "pure-dephasing decoherence curve I(t)");
    dephase->add_option("--s", dephase_opts.s, "spectral exponent")
        ->check(CLI::NonNegativeNumber)->capture_default_str();
    dephase->add_option("--lambda", dephase_opts.lambda, "coupling")
        ->check(CLI::NonNegativeNumber)->capture_default_str();
    dephase->add_option("--omega-uc", dephase_opts.omega_uc, "ultraviolet cutoff Omega_c")
        ->check(CLI::PositiveNumber)->capture_default_str();
    dephase->add_option("--t-min", dephase_opts.t_min)->check(CLI::PositiveNumber)
        ->capture_default_str();
    dephase->add_option("--t-max", dephase_opts.t_max)->check(CLI::PositiveNumber)
        ->capture_default_str();
    dephase->add_option("--points", dephase_opts.points)->check(CLI::PositiveNumber)
        ->capture_default_str();
    dephase->add_option("--method", dephase_opts.method, "closed, quadrature, or both")
        ->check(CLI::IsMember({"closed", "quadrature", "both"}))->capture_default_str();

    IsingOptions ising_opts;
    auto* ising = app.add_subcommand("ising", "long-range Ising mapping, exact enumeration");
    ising->add_option("--variant", ising_opts.variant)
        ->check(CLI::IsMember({"dephasing", "frustrated-ohmic", "frustrated-subohmic"}))
        ->capture_default_str();
    ising->add_option("--s", ising_opts.s)->check(CLI::NonNegativeNumber)->capture_default_str();
    ising->add_option("--lambda", ising_opts.lambda)->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    ising->add_option("--omega-uc", ising_opts.omega_uc)->check(CLI::PositiveNumber)
        ->capture_default_str();
    ising->add_option("--L", ising_opts.l, "imaginary-time slices (2..24)")
        ->check(CLI::Range(2, pijq::kMaxEnumerationSlices))->capture_default_str();
    ising->add_option("--dtau", ising_opts.dtau)->check(CLI::PositiveNumber)
        ->capture_default_str();

    RGOptions rg_opts;
    auto* rg = app.add_subcommand("rg", "renormalization-group flow of the frustrated coupling");
    rg->add_option("--s", rg_opts.s)->check(CLI::NonNegativeNumber)->capture_default_str();
    rg->add_option("--lambda0", rg_opts.lambda0)->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    rg->add_option("--ell-max", rg_opts.ell_max)->check(CLI::PositiveNumber)
        ->capture_default_str();
    rg->add_option("--step", rg_opts.step)->check(CLI::PositiveNumber)->capture_default_str();
    rg->add_option("--method", rg_opts.method)->check(CLI::IsMember({"rk4", "closed"}))
        ->capture_default_str();

    RTNOptions rtn_opts;
    auto* rtn = app.add_subcommand("rtn", "random telegraph noise ensemble and PSD");
    rtn->add_option("--n", rtn_opts.n_fluctuators)->check(CLI::PositiveNumber)
        ->capture_default_str();
    rtn->add_option("--rate-min", rtn_opts.rate_min)->check(CLI::PositiveNumber)
        ->capture_default_str();
    rtn->add_option("--rate-max", rtn_opts.rate_max)->check(CLI::PositiveNumber)
        ->capture_default_str();
    rtn->add_option("--amplitude", rtn_opts.amplitude)->check(CLI::PositiveNumber)
        ->capture_default_str();
    rtn->add_option("--seed", rtn_opts.seed)->capture_default_str();
    rtn->add_option("--t-max", rtn_opts.t_max)->check(CLI::PositiveNumber)
        ->capture_default_str();
    rtn->add_option("--dt", rtn_opts.dt)->check(CLI::PositiveNumber)->capture_default_str();
    rtn->add_option("--segments", rtn_opts.segments)->check(CLI::PositiveNumber)
        ->capture_default_str();

    SweepOptions sweep_opts;
    auto* sweep = app.add_subcommand("sweep", "cartesian grid runs with per-point status");
    sweep->add_option("--target", sweep_opts.target, "rg or edge-splitting")
        ->check(CLI::IsMember({"rg", "edge-splitting"}))->capture_default_str();
    sweep->add_option("--s-grid", sweep_opts.s_grid, "LO HI STEP for the s axis")
        ->expected(3);
    sweep->add_option("--lambda0", sweep_opts.lambda0_list, "lambda0 axis values");
    sweep->add_option("--ell-max", sweep_opts.ell_max)->check(CLI::PositiveNumber)
        ->capture_default_str();
    sweep->add_option("--step", sweep_opts.step)->check(CLI::PositiveNumber)
        ->capture_default_str();
    sweep->add_option("--N-list", sweep_opts.n_list, "edge-splitting N axis");
    add_wire_options(sweep, sweep_opts.wire);
    sweep->add_option("--max-points", sweep_opts.max_points)->check(CLI::PositiveNumber)
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    RunContext ctx;
    ctx.output_dir = output_dir;
    int failures = 0;
    try {
        if (spectrum->parsed()) {
            ctx.command = "spectrum";
            run_spectrum(ctx, wire_spec);
        } else if (zero_modes->parsed()) {
            ctx.command = "zero-modes";
            run_zero_modes(ctx, wire_zero);
        } else if (dephase->parsed()) {
            ctx.command = "dephase";
            run_dephase(ctx, dephase_opts);
        } else if (ising->parsed()) {
            ctx.command = "ising";
            run_ising(ctx, ising_opts);
        } else if (rg->parsed()) {
            ctx.command = "rg";
            run_rg(ctx, rg_opts);
        } else if (rtn->parsed()) {
            ctx.command = "rtn";
            run_rtn(ctx, rtn_opts);
        } else if (sweep->parsed()) {
            ctx.command = "sweep";
            failures = run_sweep(ctx, sweep_opts);
        }
        ctx.write_manifest();
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return static_cast<int>(CLI::ExitCodes::ValidationError);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return failures == 0 ? 0 : 1;
}
