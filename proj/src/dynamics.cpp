#include "armfatigue/dynamics.hpp"

#include <cmath>

namespace armfatigue {

namespace {

struct Vec2 {
    double x = 0.0, y = 0.0;
};

Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
Vec2 operator*(double k, Vec2 v) { return {k * v.x, k * v.y}; }
Vec2 perp(Vec2 v) { return {-v.y, v.x}; }
double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }

} // namespace

JointTorques inverse_dynamics(const JointState& state, const BodySegmentSet& segments,
                              const ExternalLoad& load) {
    const double s = branch_sign(state.branch);
    const double q2 = relative_elbow_angle(state.theta4, state.branch);
    const double qd1 = state.omega1, qd2 = s * state.omega4;
    const double qdd1 = state.alpha1, qdd2 = s * state.alpha4;

    const double phi1 = state.theta1, phi2 = state.theta1 + q2;
    const double w1 = qd1, w2 = qd1 + qd2;
    const double al1 = qdd1, al2 = qdd1 + qdd2;

    // Object folded into the distal link as a point mass at the hand point.
    const double m2c = segments.m2_kg + load.object_mass_kg;
    const double r2c =
        (segments.m2_kg * segments.r2_m + load.object_mass_kg * segments.L2_m) / m2c;
    const double d_seg = r2c - segments.r2_m;
    const double d_obj = segments.L2_m - r2c;
    const double I2c = segments.I2_kgm2 + segments.m2_kg * d_seg * d_seg +
                       load.object_mass_kg * d_obj * d_obj;

    const Vec2 e1{std::cos(phi1), std::sin(phi1)};
    const Vec2 e2{std::cos(phi2), std::sin(phi2)};

    // Outward pass. Gravity enters as an upward base acceleration.
    const Vec2 a_base{0.0, load.gravity_mps2};
    const Vec2 r_12 = segments.L1_m * e1;
    const Vec2 r_c1 = segments.r1_m * e1;
    const Vec2 r_c2 = r2c * e2;

    const Vec2 a_c1 = a_base + al1 * perp(r_c1) - (w1 * w1) * r_c1;
    const Vec2 a_o2 = a_base + al1 * perp(r_12) - (w1 * w1) * r_12;
    const Vec2 a_c2 = a_o2 + al2 * perp(r_c2) - (w2 * w2) * r_c2;

    // Inward pass. The environment reacts on the hand with -hand_force along x.
    const Vec2 f_env{-load.hand_force_n, 0.0};
    const Vec2 r_grip = segments.L2_m * e2;

    const Vec2 f2 = m2c * a_c2 - f_env;
    const double tau2 =
        I2c * al2 - cross({-r_c2.x, -r_c2.y}, f2) - cross(r_grip - r_c2, f_env);

    const Vec2 f1 = segments.m1_kg * a_c1 + f2;
    const double tau1 = segments.I1_kgm2 * al1 + tau2 - cross({-r_c1.x, -r_c1.y}, f1) -
                        cross(r_12 - r_c1, {-f2.x, -f2.y});

    return {tau1, tau2};
}

void mass_matrix(const JointState& state, const BodySegmentSet& segments,
                 double object_mass_kg, double out[4]) {
    const double q2 = relative_elbow_angle(state.theta4, state.branch);
    const double c2 = std::cos(q2);
    const double L1 = segments.L1_m, L2 = segments.L2_m;
    const double m1 = segments.m1_kg, m2 = segments.m2_kg, mo = object_mass_kg;
    const double r1 = segments.r1_m, r2 = segments.r2_m;

    const double m11 = segments.I1_kgm2 + m1 * r1 * r1 + segments.I2_kgm2 +
                       m2 * (L1 * L1 + r2 * r2 + 2.0 * L1 * r2 * c2) +
                       mo * (L1 * L1 + L2 * L2 + 2.0 * L1 * L2 * c2);
    const double m12 = segments.I2_kgm2 + m2 * (r2 * r2 + L1 * r2 * c2) +
                       mo * (L2 * L2 + L1 * L2 * c2);
    const double m22 = segments.I2_kgm2 + m2 * r2 * r2 + mo * L2 * L2;
    out[0] = m11;
    out[1] = m12;
    out[2] = m12;
    out[3] = m22;
}

JointTorques lagrangian_torques(const JointState& state, const BodySegmentSet& segments,
                                const ExternalLoad& load) {
    const double s = branch_sign(state.branch);
    const double q2 = relative_elbow_angle(state.theta4, state.branch);
    const double qd1 = state.omega1, qd2 = s * state.omega4;
    const double qdd1 = state.alpha1, qdd2 = s * state.alpha4;

    const double L1 = segments.L1_m, L2 = segments.L2_m;
    const double m1 = segments.m1_kg, m2 = segments.m2_kg, mo = load.object_mass_kg;
    const double r1 = segments.r1_m, r2 = segments.r2_m;
    const double g = load.gravity_mps2;

    const double c1 = std::cos(state.theta1), s1 = std::sin(state.theta1);
    const double c12 = std::cos(state.theta1 + q2), s12 = std::sin(state.theta1 + q2);
    const double s2 = std::sin(q2);

    double M[4];
    mass_matrix(state, segments, mo, M);

    const double coupling = m2 * L1 * r2 + mo * L1 * L2;
    const double h1 = -coupling * s2 * (2.0 * qd1 * qd2 + qd2 * qd2);
    const double h2 = coupling * s2 * qd1 * qd1;

    const double g1 = g * ((m1 * r1 + (m2 + mo) * L1) * c1 + (m2 * r2 + mo * L2) * c12);
    const double g2 = g * (m2 * r2 + mo * L2) * c12;

    // Hand force mapped through the Jacobian transpose; the environment
    // reaction is -hand_force along x.
    const double fx = -load.hand_force_n;
    const double ext1 = (-L1 * s1 - L2 * s12) * fx;
    const double ext2 = (-L2 * s12) * fx;

    return {M[0] * qdd1 + M[1] * qdd2 + h1 + g1 - ext1,
            M[2] * qdd1 + M[3] * qdd2 + h2 + g2 - ext2};
}

std::vector<JointTorques> torque_series(const JointTrajectory& trajectory,
                                        const BodySegmentSet& segments,
                                        const PhaseLoads& loads, double t_push_s,
                                        double t_pull_s) {
    const double cycle = t_push_s + t_pull_s;
    std::vector<JointTorques> out;
    out.reserve(trajectory.samples.size());
    for (std::size_t i = 0; i < trajectory.samples.size(); ++i) {
        const double t = static_cast<double>(i) * trajectory.dt_s;
        double u = std::fmod(t, cycle);
        if (u < 0.0) u += cycle;
        const ExternalLoad& load = u < t_push_s ? loads.push : loads.pull;
        out.push_back(inverse_dynamics(trajectory.samples[i], segments, load));
    }
    return out;
}

} // namespace armfatigue
