#pragma once

#include <cstddef>
#include <optional>
#include <span>

namespace armfatigue {

enum class Phase { push, pull };

/// Alternating work schedule, starting with a push phase at t = 0.
struct PhaseSchedule {
    double t_push_s = 0.0;
    double t_pull_s = 0.0;
};

/// Phase active at time t; periodic with period t_push + t_pull,
/// [0, t_push) -> push.
Phase phase_at(double t_s, const PhaseSchedule& schedule);

/// Fatigue rate constants in 1/minute (converted to 1/second internally).
/// Separate values per muscle group; recovery_per_min > 0 enables an
/// exponential return of R toward 1 while a group is inactive (off by
/// default).
struct FatigueParams {
    double k_push_per_min = 1.0;
    double k_pull_per_min = 1.0;
    double recovery_per_min = 0.0;
};

/// Fatigue state of one muscle group at one joint.
///   R     - accumulated fatigue factor, exp of the loading integral,
///           in (0, 1], 1 = fresh, non-increasing under the default
///           no-recovery policy.
///   fcem  - current exertable maximum torque MVC(posture) * R, as of the
///           group's last active update.
struct GroupFatigueState {
    double R = 1.0;
    double fcem_nm = 0.0;
};

/// Advance one group by dt. Active groups multiply R by
/// exp(-k * (demand/mvc) * dt), which keeps R positive for any step size;
/// inactive groups are returned bit-identical (unless recovery is enabled).
/// Throws GuardViolation if mvc_now <= 0.
GroupFatigueState fatigue_step(const GroupFatigueState& state, double demand_nm,
                               double mvc_now_nm, const FatigueParams& params,
                               Phase group, double dt_s, bool active);

/// Closed-form capacity under constant load: MVC * exp(-k * load * t / MVC).
/// k in 1/minute, t in minutes.
double static_fcem(double mvc_nm, double load_nm, double k_per_min, double t_min);

enum class MetKind { finite, immediate_risk, unbounded };

struct MetResult {
    MetKind kind = MetKind::finite;
    double minutes = 0.0; // meaningful for kind == finite (and 0 for immediate_risk)
};

/// Maximum endurance time: the t solving static_fcem(...) = load, i.e.
/// (MVC / (k * load)) * ln(MVC / load) minutes. load > MVC reports
/// immediate risk; load = 0 or k = 0 reports unbounded endurance.
MetResult met_static(double mvc_nm, double load_nm, double k_per_min);

/// Capacity selector: the active group's current exertable maximum,
/// MVC(posture now) * R of whichever group the phase activates.
double piecewise_capacity(double t_s, const GroupFatigueState& push_state,
                          const GroupFatigueState& pull_state, double mvc_now_nm,
                          const PhaseSchedule& schedule);

/// First time where capacity <= demand, refined by linear interpolation
/// between the bracketing samples.
struct Crossing {
    double time_s = 0.0;
    double demand_nm = 0.0;
    double capacity_nm = 0.0;
};

/// Scan two aligned series sampled at dt. Throws ValidationError on length
/// mismatch; returns nullopt if capacity stays above demand throughout.
std::optional<Crossing> detect_crossing(std::span<const double> capacity_nm,
                                        std::span<const double> demand_nm, double dt_s);

} // namespace armfatigue
