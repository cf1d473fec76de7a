#include "armfatigue/fatigue.hpp"

#include <cmath>
#include <string>

#include "armfatigue/errors.hpp"

namespace armfatigue {

Phase phase_at(double t_s, const PhaseSchedule& schedule) {
    const double cycle = schedule.t_push_s + schedule.t_pull_s;
    double u = std::fmod(t_s, cycle);
    if (u < 0.0) u += cycle;
    return u < schedule.t_push_s ? Phase::push : Phase::pull;
}

GroupFatigueState fatigue_step(const GroupFatigueState& state, double demand_nm,
                               double mvc_now_nm, const FatigueParams& params,
                               Phase group, double dt_s, bool active) {
    if (!active) {
        if (params.recovery_per_min > 0.0 && dt_s > 0.0) {
            const double rec = params.recovery_per_min / 60.0;
            GroupFatigueState next = state;
            next.R = 1.0 - (1.0 - state.R) * std::exp(-rec * dt_s);
            return next;
        }
        return state; // bit-identical under the no-recovery policy
    }
    if (!(mvc_now_nm > 0.0)) {
        throw GuardViolation("fatigue model invalid: MVC = " + std::to_string(mvc_now_nm) +
                                 " N*m at current posture",
                             0.0);
    }
    const double k_per_s =
        (group == Phase::push ? params.k_push_per_min : params.k_pull_per_min) / 60.0;
    GroupFatigueState next;
    next.R = state.R * std::exp(-k_per_s * (demand_nm / mvc_now_nm) * dt_s);
    next.fcem_nm = mvc_now_nm * next.R;
    return next;
}

double static_fcem(double mvc_nm, double load_nm, double k_per_min, double t_min) {
    return mvc_nm * std::exp(-k_per_min * load_nm * t_min / mvc_nm);
}

MetResult met_static(double mvc_nm, double load_nm, double k_per_min) {
    if (load_nm > mvc_nm) return {MetKind::immediate_risk, 0.0};
    if (load_nm <= 0.0 || k_per_min <= 0.0) return {MetKind::unbounded, 0.0};
    return {MetKind::finite, mvc_nm / (k_per_min * load_nm) * std::log(mvc_nm / load_nm)};
}

double piecewise_capacity(double t_s, const GroupFatigueState& push_state,
                          const GroupFatigueState& pull_state, double mvc_now_nm,
                          const PhaseSchedule& schedule) {
    const GroupFatigueState& active =
        phase_at(t_s, schedule) == Phase::push ? push_state : pull_state;
    return mvc_now_nm * active.R;
}

std::optional<Crossing> detect_crossing(std::span<const double> capacity_nm,
                                        std::span<const double> demand_nm, double dt_s) {
    if (capacity_nm.size() != demand_nm.size()) {
        throw ValidationError("crossing detection: capacity series has " +
                              std::to_string(capacity_nm.size()) + " samples, demand has " +
                              std::to_string(demand_nm.size()));
    }
    for (std::size_t i = 0; i < capacity_nm.size(); ++i) {
        const double margin = capacity_nm[i] - demand_nm[i];
        if (margin > 0.0) continue;

        if (i == 0) return Crossing{0.0, demand_nm[0], capacity_nm[0]};

        const double prev_margin = capacity_nm[i - 1] - demand_nm[i - 1];
        // prev_margin > 0 >= margin; interpolate the zero of the margin.
        const double frac = prev_margin / (prev_margin - margin);
        const double t = (static_cast<double>(i - 1) + frac) * dt_s;
        const double demand =
            demand_nm[i - 1] + frac * (demand_nm[i] - demand_nm[i - 1]);
        const double capacity =
            capacity_nm[i - 1] + frac * (capacity_nm[i] - capacity_nm[i - 1]);
        return Crossing{t, demand, capacity};
    }
    return std::nullopt;
}

} // namespace armfatigue
