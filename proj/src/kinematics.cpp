#include "armfatigue/kinematics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "armfatigue/errors.hpp"

namespace armfatigue {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

double clamp_unit(double v) { return std::clamp(v, -1.0, 1.0); }

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

} // namespace

double branch_sign(Branch branch) { return branch == Branch::elbow_up ? 1.0 : -1.0; }

double relative_elbow_angle(double theta4, Branch branch) {
    return branch_sign(branch) * (theta4 - kPi);
}

HandPosition forward_kinematics(const JointState& state, const BodySegmentSet& segments) {
    const double phi2 = state.theta1 + relative_elbow_angle(state.theta4, state.branch);
    return {segments.L1_m * std::cos(state.theta1) + segments.L2_m * std::cos(phi2),
            segments.L1_m * std::sin(state.theta1) + segments.L2_m * std::sin(phi2)};
}

JointState inverse_kinematics(const HandPosition& hand, const BodySegmentSet& segments,
                              Branch branch) {
    const double L1 = segments.L1_m, L2 = segments.L2_m;
    const double r2 = hand.x_m * hand.x_m + hand.y_m * hand.y_m;
    const double r = std::sqrt(r2);
    const double r_min = std::abs(L1 - L2);
    const double r_max = L1 + L2;
    const double tol = 16.0 * std::numeric_limits<double>::epsilon() * r_max;

    if (std::abs(r - r_max) <= tol || std::abs(r - r_min) <= tol) {
        throw SingularPostureError("target (" + fmt(hand.x_m) + ", " + fmt(hand.y_m) +
                                   ") lies on the workspace boundary (r = " + fmt(r) + " m)");
    }
    if (r > r_max || r < r_min) {
        throw UnreachableTargetError("target (" + fmt(hand.x_m) + ", " + fmt(hand.y_m) +
                                     ") is outside the reachable annulus " + fmt(r_min) +
                                     " < r < " + fmt(r_max) + " (r = " + fmt(r) + " m)");
    }

    // Triangle shoulder-elbow-hand: included elbow angle opposite the chord r,
    // shoulder offset beta between the chord and the upper arm.
    const double theta4 = std::acos(clamp_unit((L1 * L1 + L2 * L2 - r2) / (2.0 * L1 * L2)));
    const double beta = std::acos(clamp_unit((r2 + L1 * L1 - L2 * L2) / (2.0 * r * L1)));
    const double gamma = std::atan2(hand.y_m, hand.x_m);

    JointState state;
    state.theta1 = branch == Branch::elbow_up ? gamma + beta : gamma - beta;
    state.theta4 = theta4;
    state.branch = branch;
    return state;
}

void hand_motion_at(const HandPath& path, double t_s, double& x_m, double& vx_mps,
                    double& ax_mps2) {
    const double half = path.stroke_period_s / 2.0;
    double u = std::fmod(t_s, path.stroke_period_s);
    if (u < 0.0) u += path.stroke_period_s;

    const bool outward = u < half;
    const double s = (outward ? u : u - half) / half;
    const double from = outward ? path.x_start_m : path.x_end_m;
    const double delta = (outward ? path.x_end_m : path.x_start_m) - from;

    switch (path.profile) {
    case PathProfile::cosine_smooth: {
        x_m = from + delta * 0.5 * (1.0 - std::cos(kPi * s));
        vx_mps = delta * kPi / (2.0 * half) * std::sin(kPi * s);
        ax_mps2 = delta * kPi * kPi / (2.0 * half * half) * std::cos(kPi * s);
        break;
    }
    case PathProfile::constant_velocity:
        x_m = from + delta * s;
        vx_mps = delta / half;
        ax_mps2 = 0.0;
        break;
    }
}

JointState path_state_at(const HandPath& path, const BodySegmentSet& segments,
                         Branch branch, double t_s) {
    double x, vx, ax;
    hand_motion_at(path, t_s, x, vx, ax);

    JointState state;
    try {
        state = inverse_kinematics({x, path.y_hand_m}, segments, branch);
    } catch (const UnreachableTargetError& e) {
        throw UnreachableTargetError(std::string(e.what()) + " at t = " + fmt(t_s) + " s");
    } catch (const SingularPostureError& e) {
        throw SingularPostureError(std::string(e.what()) + " at t = " + fmt(t_s) + " s");
    }

    // Differential kinematics in (theta1, q2) coordinates.
    const double L1 = segments.L1_m, L2 = segments.L2_m;
    const double q2 = relative_elbow_angle(state.theta4, branch);
    const double c1 = std::cos(state.theta1), s1 = std::sin(state.theta1);
    const double c12 = std::cos(state.theta1 + q2), s12 = std::sin(state.theta1 + q2);

    const double j00 = -L1 * s1 - L2 * s12, j01 = -L2 * s12;
    const double j10 = L1 * c1 + L2 * c12, j11 = L2 * c12;
    const double det = j00 * j11 - j01 * j10; // = L1 L2 sin(q2)
    if (std::abs(det) < 1e-12) {
        throw SingularPostureError("Jacobian singular at t = " + fmt(t_s) + " s");
    }

    const double qd1 = j11 * vx / det;
    const double qd2 = -j10 * vx / det;

    const double w1 = qd1, w12 = qd1 + qd2;
    const double jd00 = -L1 * c1 * w1 - L2 * c12 * w12, jd01 = -L2 * c12 * w12;
    const double jd10 = -L1 * s1 * w1 - L2 * s12 * w12, jd11 = -L2 * s12 * w12;
    const double bx = ax - (jd00 * qd1 + jd01 * qd2);
    const double by = -(jd10 * qd1 + jd11 * qd2);
    const double qdd1 = (j11 * bx - j01 * by) / det;
    const double qdd2 = (-j10 * bx + j00 * by) / det;

    const double s = branch_sign(branch);
    state.omega1 = qd1;
    state.omega4 = s * qd2;
    state.alpha1 = qdd1;
    state.alpha4 = s * qdd2;
    return state;
}

JointTrajectory generate_trajectory(const HandPath& path, const BodySegmentSet& segments,
                                    double dt_s, double duration_s, Branch branch) {
    if (!(dt_s > 0.0)) throw ValidationError("trajectory: dt must be > 0 s");
    if (!(duration_s >= 0.0)) throw ValidationError("trajectory: duration must be >= 0 s");
    if (!(path.stroke_period_s > 0.0))
        throw ValidationError("hand path: stroke_period must be > 0 s");
    if (path.x_start_m == path.x_end_m)
        throw ValidationError("hand path: x_start and x_end must differ");

    const auto n = static_cast<std::size_t>(std::llround(duration_s / dt_s));

    JointTrajectory traj;
    traj.dt_s = dt_s;
    traj.branch = branch;
    traj.samples.reserve(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        traj.samples.push_back(
            path_state_at(path, segments, branch, static_cast<double>(i) * dt_s));
    }
    return traj;
}

} // namespace armfatigue
