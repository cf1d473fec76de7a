#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "armfatigue/anthropometry.hpp"
#include "armfatigue/dynamics.hpp"
#include "armfatigue/fatigue.hpp"
#include "armfatigue/kinematics.hpp"
#include "armfatigue/strength.hpp"

namespace armfatigue {

inline constexpr int kScenarioSchemaVersion = 1;

struct OutputOptions {
    std::size_t csv_stride = 1; // emit every n-th sample to the time-series CSV
};

/// Complete, self-contained description of one simulation.
struct Scenario {
    Subject subject;
    ProportionTable proportions;
    HandPath path;
    Branch branch = Branch::elbow_down;
    PhaseSchedule schedule;
    double push_force_n = 0.0; // force exerted by the hand during push phases, along +x
    double pull_force_n = 0.0; // force exerted during pull phases, along -x
    double object_mass_kg = 0.0;
    double gravity_mps2 = 9.81;
    StrengthModel strength;
    FatigueParams fatigue;
    double dt_s = 1e-3;
    double horizon_s = 0.0;
    OutputOptions output;
};

/// Parse a scenario from JSON text (// and /* */ comments allowed).
/// Unknown keys are rejected. Throws ValidationError on malformed input.
Scenario parse_scenario(const std::string& json_text);

/// Read and parse a scenario file. Throws IoError if unreadable.
Scenario load_scenario_file(const std::string& path);

/// Canonical JSON form of a scenario (sorted keys, no comments).
std::string scenario_to_json(const Scenario& scenario);

/// FNV-1a 64-bit hash of the canonical JSON form, as 16 hex digits.
std::string scenario_hash(const Scenario& scenario);

struct ValidationReport {
    std::vector<std::string> problems; // empty = valid; lists every violation found
    bool ok() const { return problems.empty(); }
};

/// Check every scenario invariant; never throws, reports all violations.
ValidationReport validate(const Scenario& scenario);

/// Column-oriented result of a run. All series share the time base
/// t_i = i * dt; angles are stored in radians and exported in degrees.
struct SimulationResult {
    // provenance
    std::string scenario_hash;
    std::string tool_version;
    double dt_s = 0.0;
    double horizon_s = 0.0;

    std::vector<double> theta1_rad, theta4_rad;
    std::vector<double> tau_shoulder_nm, tau_elbow_nm;
    std::vector<double> mvc_shoulder_nm, mvc_elbow_nm;
    std::vector<double> r_shoulder_push, r_shoulder_pull, r_elbow_push, r_elbow_pull;
    std::vector<double> capacity_shoulder_nm, capacity_elbow_nm;
    std::vector<Phase> phase;

    std::optional<Crossing> shoulder_crossing;
    std::optional<Crossing> elbow_crossing;
    double shoulder_min_margin_nm = 0.0; // min(capacity - demand) over the run
    double elbow_min_margin_nm = 0.0;
    std::size_t strength_out_of_window_samples = 0;

    std::size_t size() const { return theta1_rad.size(); }
};

/// Run the simulation loop (kinematics -> dynamics -> strength -> fatigue ->
/// crossing bookkeeping per step). Deterministic; identical scenarios yield
/// identical results. Throws ValidationError if the scenario is invalid and
/// GuardViolation if a model guard trips mid-run; bookkeeping continues past
/// capacity crossings so the full curves are produced.
SimulationResult run(const Scenario& scenario);

/// Fixed-order time-series CSV (see README for the column list). Honors
/// OutputOptions::csv_stride used at run time via the stride argument.
void export_timeseries_csv(const SimulationResult& result, std::size_t stride,
                           const std::string& path);

/// JSON summary: crossings in seconds and minutes, capacity margins,
/// provenance block. Deterministic byte output.
void export_summary_json(const SimulationResult& result, const std::string& path);

/// Parsed back form of the time-series CSV, as written (degrees).
struct ParsedTimeSeries {
    std::vector<double> t_s, theta1_deg, theta4_deg;
    std::vector<double> tau_shoulder_nm, tau_elbow_nm;
    std::vector<double> mvc_shoulder_nm, mvc_elbow_nm;
    std::vector<double> r_shoulder_push, r_shoulder_pull, r_elbow_push, r_elbow_pull;
    std::vector<double> capacity_shoulder_nm, capacity_elbow_nm;
    std::vector<Phase> phase;
};

ParsedTimeSeries parse_timeseries_csv(const std::string& path);

} // namespace armfatigue
