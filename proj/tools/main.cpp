// armfatigue - command-line front end for the push/pull arm fatigue simulator.
//
// Exit codes: 0 success, 2 validation failure, 3 runtime failure,
// 4 I/O failure.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "armfatigue/errors.hpp"
#include "armfatigue/fatigue.hpp"
#include "armfatigue/scenario.hpp"
#include "armfatigue/strength.hpp"
#include "armfatigue/version.hpp"
#include "line_chart.hpp"

namespace {

namespace fs = std::filesystem;
using namespace armfatigue;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitRuntime = 3;
constexpr int kExitIo = 4;

std::string default_out_dir() {
    const char* env = std::getenv("ARMFATIGUE_OUT_DIR");
    return env && *env ? env : ".";
}

void write_plots(const SimulationResult& res, const fs::path& dir) {
    const std::size_t n = res.size();
    const std::size_t step = std::max<std::size_t>(1, n / 4800);
    std::vector<double> t, cap_s, cap_e, dem_s, dem_e, tau_s, tau_e;
    for (std::size_t i = 0; i < n; i += step) {
        t.push_back(static_cast<double>(i) * res.dt_s / 60.0);
        cap_s.push_back(res.capacity_shoulder_nm[i]);
        cap_e.push_back(res.capacity_elbow_nm[i]);
        dem_s.push_back(std::abs(res.tau_shoulder_nm[i]));
        dem_e.push_back(std::abs(res.tau_elbow_nm[i]));
        tau_s.push_back(res.tau_shoulder_nm[i]);
        tau_e.push_back(res.tau_elbow_nm[i]);
    }

    plot::LineChart cap("Joint capacity vs. torque demand", "time [min]", "torque [N*m]");
    cap.add("shoulder capacity", "#1f77b4", t, cap_s);
    cap.add("shoulder demand", "#9ecae1", t, dem_s);
    cap.add("elbow capacity", "#d62728", t, cap_e);
    cap.add("elbow demand", "#ff9896", t, dem_e);
    cap.write((dir / "capacity_demand.svg").string());

    plot::LineChart tau("Joint torque trends", "time [min]", "torque [N*m]");
    tau.add("shoulder", "#1f77b4", t, tau_s);
    tau.add("elbow", "#d62728", t, tau_e);
    tau.write((dir / "torque_trends.svg").string());
}

void print_crossing(const char* joint, const std::optional<Crossing>& c) {
    if (c) {
        std::printf("%s: capacity falls below demand at %.3f s (%.4f min), "
                    "capacity = demand = %.4f N*m\n",
                    joint, c->time_s, c->time_s / 60.0, c->capacity_nm);
    } else {
        std::printf("%s: capacity stays above demand for the whole horizon\n", joint);
    }
}

int cmd_simulate(const std::string& scenario_path, const std::string& out_dir,
                 double dt_override, bool plot) {
    Scenario sc = load_scenario_file(scenario_path);
    if (dt_override > 0.0) sc.dt_s = dt_override;

    const SimulationResult res = run(sc);

    const fs::path dir(out_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoError("cannot create output directory '" + out_dir + "': " + ec.message());

    export_timeseries_csv(res, sc.output.csv_stride, (dir / "timeseries.csv").string());
    export_summary_json(res, (dir / "summary.json").string());
    if (plot) write_plots(res, dir);

    std::printf("scenario %s, dt = %g s, %zu samples\n", res.scenario_hash.c_str(), res.dt_s,
                res.size());
    print_crossing("shoulder", res.shoulder_crossing);
    print_crossing("elbow", res.elbow_crossing);
    if (res.strength_out_of_window_samples > 0) {
        std::printf("note: %zu samples evaluated the strength regressions outside their "
                    "0-180 deg validity window\n",
                    res.strength_out_of_window_samples);
    }
    std::printf("outputs written to %s\n", dir.string().c_str());
    return kExitOk;
}

int cmd_strength(double alpha_e, double alpha_s, const std::string& gender_str, double g_override,
                 bool sweep, const std::string& vary, double from, double to, double step_deg) {
    StrengthModel model;
    const Gender gender = gender_str == "f" ? Gender::female : Gender::male;
    const GenderFactors gf = default_gender_factors(gender);
    model.g_elbow = gf.elbow;
    model.g_shoulder = gf.shoulder;
    if (g_override >= 0.0) {
        model.g_elbow = g_override;
        model.g_shoulder = g_override;
    }

    if (sweep) {
        if (!(step_deg > 0.0) || from > to) {
            throw ValidationError("strength sweep: need --from <= --to and --step > 0");
        }
        std::printf("alpha_e_deg,alpha_s_deg,strength_elbow_Nm,strength_shoulder_Nm\n");
        for (double a = from; a <= to + 1e-9; a += step_deg) {
            const double ae = vary == "s" ? alpha_e : a;
            const double as = vary == "s" ? a : alpha_s;
            const StrengthValue e = strength_elbow(ae, as, model);
            const StrengthValue s = strength_shoulder(ae, as, model);
            std::printf("%.3f,%.3f,%.3f,%.3f\n", ae, as, e.nm, s.nm);
        }
        return kExitOk;
    }

    const StrengthValue e = strength_elbow(alpha_e, alpha_s, model);
    const StrengthValue s = strength_shoulder(alpha_e, alpha_s, model);
    std::printf("alpha_e = %.3f deg, alpha_s = %.3f deg, G_elbow = %.4f, G_shoulder = %.4f\n",
                alpha_e, alpha_s, model.g_elbow, model.g_shoulder);
    std::printf("elbow strength    = %.3f N*m\n", e.nm);
    std::printf("shoulder strength = %.3f N*m\n", s.nm);
    if (!e.in_window || !s.in_window) {
        std::printf("warning: angles outside the 0-180 deg regression validity window\n");
    }
    return kExitOk;
}

int cmd_met(double mvc, double load, double k) {
    if (!(mvc > 0.0)) throw ValidationError("met: --mvc must be > 0 N*m");
    if (load < 0.0) throw ValidationError("met: --load must be >= 0 N*m");
    if (k < 0.0) throw ValidationError("met: --k must be >= 0 per minute");

    const MetResult r = met_static(mvc, load, k);
    switch (r.kind) {
    case MetKind::finite:
        std::printf("MET = %.4f min (%.2f s)\n", r.minutes, r.minutes * 60.0);
        break;
    case MetKind::immediate_risk:
        std::printf("load %.3f N*m exceeds capacity %.3f N*m: immediate fatigue risk "
                    "(MET = 0.0000 min)\n",
                    load, mvc);
        break;
    case MetKind::unbounded:
        std::printf("capacity never drops to the load (load = %.3f N*m, k = %.4f /min): "
                    "unbounded endurance\n",
                    load, k);
        break;
    }
    return kExitOk;
}

int cmd_validate(const std::string& scenario_path) {
    const Scenario sc = load_scenario_file(scenario_path);
    const ValidationReport rep = validate(sc);
    if (rep.ok()) {
        std::printf("scenario OK (hash %s)\n", scenario_hash(sc).c_str());
        return kExitOk;
    }
    std::fprintf(stderr, "scenario invalid:\n");
    for (const auto& p : rep.problems) std::fprintf(stderr, "  - %s\n", p.c_str());
    return kExitValidation;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{std::string(kToolName) + " " + kToolVersion +
                 " - planar arm push/pull fatigue simulator"};
    app.require_subcommand(1);

    // simulate
    std::string scenario_path, out_dir = default_out_dir();
    double dt_override = -1.0;
    bool plot = false;
    auto* sim = app.add_subcommand("simulate", "Run a scenario and export CSV/JSON results");
    sim->add_option("--scenario", scenario_path, "Scenario JSON file")->required();
    sim->add_option("--out", out_dir,
                    "Output directory (default: $ARMFATIGUE_OUT_DIR or current dir)");
    sim->add_option("--dt", dt_override, "Override the scenario time step, in seconds");
    sim->add_flag("--plot", plot, "Also write capacity/demand and torque SVG plots");

    // strength
    double alpha_e = 0.0, alpha_s = 0.0, g_override = -1.0;
    std::string gender = "m", vary = "e";
    bool sweep = false;
    double sweep_from = 0.0, sweep_to = 180.0, sweep_step = 5.0;
    auto* str = app.add_subcommand(
        "strength", "Evaluate the posture-dependent joint strength regressions");
    str->add_option("--alpha-e", alpha_e, "Elbow regression angle alpha_e, in degrees")
        ->required();
    str->add_option("--alpha-s", alpha_s, "Shoulder regression angle alpha_s, in degrees")
        ->required();
    str->add_option("--gender", gender, "Gender factor set: m or f (default m)")
        ->check(CLI::IsMember({"m", "f"}));
    str->add_option("--g", g_override,
                    "Override both gender factors with this value (dimensionless)");
    str->add_flag("--sweep", sweep, "Emit a CSV curve over an angle range instead");
    str->add_option("--vary", vary, "Which angle the sweep varies: e or s (default e)")
        ->check(CLI::IsMember({"e", "s"}));
    str->add_option("--from", sweep_from, "Sweep start angle, in degrees (default 0)");
    str->add_option("--to", sweep_to, "Sweep end angle, in degrees (default 180)");
    str->add_option("--step", sweep_step, "Sweep step, in degrees (default 5)");

    // met
    double mvc = 0.0, load = 0.0, k = 1.0;
    auto* met = app.add_subcommand(
        "met", "Maximum endurance time under constant load (static posture)");
    met->add_option("--mvc", mvc, "Maximum voluntary contraction, in N*m")->required();
    met->add_option("--load", load, "Constant torque demand, in N*m")->required();
    met->add_option("--k", k, "Fatigue rate, in 1/minute (default 1)");

    // validate
    std::string validate_path;
    auto* val = app.add_subcommand("validate", "Check a scenario file and report every problem");
    val->add_option("--scenario", validate_path, "Scenario JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitValidation;
    }

    try {
        if (sim->parsed()) return cmd_simulate(scenario_path, out_dir, dt_override, plot);
        if (str->parsed()) {
            return cmd_strength(alpha_e, alpha_s, gender, g_override, sweep, vary, sweep_from,
                                sweep_to, sweep_step);
        }
        if (met->parsed()) return cmd_met(mvc, load, k);
        if (val->parsed()) return cmd_validate(validate_path);
    } catch (const ValidationError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitValidation;
    } catch (const KinematicsError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitValidation;
    } catch (const GuardViolation& e) {
        std::fprintf(stderr, "runtime guard violation: %s\n", e.what());
        return kExitRuntime;
    } catch (const IoError& e) {
        std::fprintf(stderr, "I/O error: %s\n", e.what());
        return kExitIo;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "runtime error: %s\n", e.what());
        return kExitRuntime;
    }
    return kExitOk;
}
