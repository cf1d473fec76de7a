#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "armfatigue/dynamics.hpp"
#include "armfatigue/kinematics.hpp"

using namespace armfatigue;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

BodySegmentSet test_segments() {
    BodySegmentSet s;
    s.L1_m = 0.35;
    s.L2_m = 0.28;
    s.m1_kg = 2.52;
    s.m2_kg = 1.98;
    s.r1_m = 0.1526;
    s.r2_m = 0.191;
    s.I1_kgm2 = 0.032;
    s.I2_kgm2 = 0.033;
    return s;
}

double rel_diff(double a, double b) {
    const double scale = std::max({std::abs(a), std::abs(b), 1e-6});
    return std::abs(a - b) / scale;
}

} // namespace

TEST_CASE("unloaded statics is in equilibrium") {
    JointState st;
    st.theta1 = 0.7;
    st.theta4 = 2.0;
    const ExternalLoad none{0.0, 0.0, 0.0};
    const JointTorques ne = inverse_dynamics(st, test_segments(), none);
    const JointTorques lg = lagrangian_torques(st, test_segments(), none);
    CHECK(ne.shoulder_nm == doctest::Approx(0.0).scale(1.0).epsilon(1e-14));
    CHECK(ne.elbow_nm == doctest::Approx(0.0).scale(1.0).epsilon(1e-14));
    CHECK(lg.shoulder_nm == doctest::Approx(0.0).scale(1.0).epsilon(1e-14));
    CHECK(lg.elbow_nm == doctest::Approx(0.0).scale(1.0).epsilon(1e-14));
}

TEST_CASE("static horizontal arm matches the hand-checkable closed form") {
    const BodySegmentSet seg = test_segments();
    JointState st;
    st.theta1 = 0.0;
    st.theta4 = kPi; // straight along +x
    ExternalLoad load;
    load.hand_force_n = 0.0;
    load.object_mass_kg = 2.0;
    load.gravity_mps2 = 9.81;

    const double tau_s_expected =
        load.gravity_mps2 * (seg.m1_kg * seg.r1_m + seg.m2_kg * (seg.L1_m + seg.r2_m) +
                             load.object_mass_kg * (seg.L1_m + seg.L2_m));
    const double tau_e_expected =
        load.gravity_mps2 * (seg.m2_kg * seg.r2_m + load.object_mass_kg * seg.L2_m);

    for (Branch b : {Branch::elbow_up, Branch::elbow_down}) {
        st.branch = b;
        const JointTorques ne = inverse_dynamics(st, seg, load);
        CHECK(ne.shoulder_nm == doctest::Approx(tau_s_expected).epsilon(1e-12));
        CHECK(ne.elbow_nm == doctest::Approx(tau_e_expected).epsilon(1e-12));
        const JointTorques lg = lagrangian_torques(st, seg, load);
        CHECK(lg.shoulder_nm == doctest::Approx(tau_s_expected).epsilon(1e-12));
        CHECK(lg.elbow_nm == doctest::Approx(tau_e_expected).epsilon(1e-12));
    }
}

TEST_CASE("Newton-Euler matches the Lagrangian closed form on 1000 random states") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    std::uniform_real_distribution<double> elbow(0.05, kPi - 0.05);
    std::uniform_real_distribution<double> rate(-8.0, 8.0);
    std::uniform_real_distribution<double> accel(-40.0, 40.0);
    std::uniform_real_distribution<double> force(-120.0, 120.0);
    std::uniform_real_distribution<double> mass(0.0, 8.0);
    std::uniform_real_distribution<double> grav(0.0, 15.0);
    std::uniform_real_distribution<double> len(0.15, 0.6);
    std::uniform_real_distribution<double> frac(0.2, 0.8);

    for (int i = 0; i < 1000; ++i) {
        BodySegmentSet seg;
        seg.L1_m = len(rng);
        seg.L2_m = len(rng);
        seg.m1_kg = 0.5 + mass(rng);
        seg.m2_kg = 0.5 + mass(rng);
        seg.r1_m = frac(rng) * seg.L1_m;
        seg.r2_m = frac(rng) * seg.L2_m;
        seg.I1_kgm2 = 0.01 + 0.05 * frac(rng);
        seg.I2_kgm2 = 0.01 + 0.05 * frac(rng);

        JointState st;
        st.theta1 = angle(rng);
        st.theta4 = elbow(rng);
        st.omega1 = rate(rng);
        st.omega4 = rate(rng);
        st.alpha1 = accel(rng);
        st.alpha4 = accel(rng);
        st.branch = (i % 2 == 0) ? Branch::elbow_down : Branch::elbow_up;

        const ExternalLoad load{force(rng), mass(rng), grav(rng)};
        const JointTorques ne = inverse_dynamics(st, seg, load);
        const JointTorques lg = lagrangian_torques(st, seg, load);
        CHECK(rel_diff(ne.shoulder_nm, lg.shoulder_nm) <= 1e-9);
        CHECK(rel_diff(ne.elbow_nm, lg.elbow_nm) <= 1e-9);
    }
}

TEST_CASE("statics is affine in hand force, gravity, and object mass") {
    const BodySegmentSet seg = test_segments();
    JointState st;
    st.theta1 = -0.8;
    st.theta4 = 1.9;
    st.branch = Branch::elbow_down;

    auto tau = [&](double force, double g, double mo) {
        return inverse_dynamics(st, seg, {force, mo, g});
    };

    SUBCASE("hand force") {
        const JointTorques t0 = tau(0.0, 9.81, 2.0);
        const JointTorques t1 = tau(7.0, 9.81, 2.0);
        const JointTorques t2 = tau(14.0, 9.81, 2.0);
        CHECK(t2.shoulder_nm - t1.shoulder_nm ==
              doctest::Approx(t1.shoulder_nm - t0.shoulder_nm).epsilon(1e-12));
        CHECK(t2.elbow_nm - t1.elbow_nm ==
              doctest::Approx(t1.elbow_nm - t0.elbow_nm).epsilon(1e-12));
    }
    SUBCASE("gravity") {
        const JointTorques t0 = tau(5.0, 0.0, 2.0);
        const JointTorques t1 = tau(5.0, 4.0, 2.0);
        const JointTorques t2 = tau(5.0, 8.0, 2.0);
        CHECK(t2.shoulder_nm - t1.shoulder_nm ==
              doctest::Approx(t1.shoulder_nm - t0.shoulder_nm).epsilon(1e-12));
    }
    SUBCASE("object mass") {
        const JointTorques t0 = tau(5.0, 9.81, 0.0);
        const JointTorques t1 = tau(5.0, 9.81, 1.5);
        const JointTorques t2 = tau(5.0, 9.81, 3.0);
        CHECK(t2.elbow_nm - t1.elbow_nm ==
              doctest::Approx(t1.elbow_nm - t0.elbow_nm).epsilon(1e-12));
    }
}

TEST_CASE("reversing the hand force negates static weightless torques") {
    const BodySegmentSet seg = test_segments();
    JointState st;
    st.theta1 = -0.6;
    st.theta4 = 2.1;
    st.branch = Branch::elbow_down;
    const JointTorques plus = inverse_dynamics(st, seg, {10.0, 0.0, 0.0});
    const JointTorques minus = inverse_dynamics(st, seg, {-10.0, 0.0, 0.0});
    CHECK(plus.shoulder_nm == doctest::Approx(-minus.shoulder_nm).epsilon(1e-12));
    CHECK(plus.elbow_nm == doctest::Approx(-minus.elbow_nm).epsilon(1e-12));
}

TEST_CASE("torque_series applies the phase-appropriate load pointwise") {
    const BodySegmentSet seg = test_segments();
    HandPath path;
    path.x_start_m = 0.3;
    path.x_end_m = 0.4;
    path.stroke_period_s = 8.0;
    path.profile = PathProfile::constant_velocity;

    const JointTrajectory traj = generate_trajectory(path, seg, 0.05, 8.0, Branch::elbow_down);
    PhaseLoads loads;
    loads.push = {10.0, 2.0, 9.81};
    loads.pull = {-10.0, 2.0, 9.81};
    const auto series = torque_series(traj, seg, loads, 4.0, 4.0);
    REQUIRE(series.size() == traj.samples.size());

    const std::size_t mid_push = 40;  // t = 2 s, push phase
    const std::size_t mid_pull = 120; // t = 6 s, pull phase
    const JointTorques expect_push = inverse_dynamics(traj.samples[mid_push], seg, loads.push);
    const JointTorques expect_pull = inverse_dynamics(traj.samples[mid_pull], seg, loads.pull);
    CHECK(series[mid_push].shoulder_nm == expect_push.shoulder_nm);
    CHECK(series[mid_push].elbow_nm == expect_push.elbow_nm);
    CHECK(series[mid_pull].shoulder_nm == expect_pull.shoulder_nm);
    CHECK(series[mid_pull].elbow_nm == expect_pull.elbow_nm);
}

TEST_CASE("power integrates to kinetic energy with no gravity and no hand force") {
    const BodySegmentSet seg = test_segments();
    HandPath path;
    path.x_start_m = 0.25;
    path.x_end_m = 0.45;
    path.y_hand_m = -0.05;
    path.stroke_period_s = 4.0;
    path.profile = PathProfile::cosine_smooth;

    const double dt = 1e-4;
    const JointTrajectory traj = generate_trajectory(path, seg, dt, 1.3, Branch::elbow_down);
    const ExternalLoad load{0.0, 2.0, 0.0};

    auto kinetic = [&](const JointState& st) {
        double M[4];
        mass_matrix(st, seg, load.object_mass_kg, M);
        const double s = branch_sign(st.branch);
        const double qd1 = st.omega1, qd2 = s * st.omega4;
        return 0.5 * (M[0] * qd1 * qd1 + 2.0 * M[1] * qd1 * qd2 + M[3] * qd2 * qd2);
    };
    auto power = [&](const JointState& st) {
        const JointTorques tau = inverse_dynamics(st, seg, load);
        const double s = branch_sign(st.branch);
        return tau.shoulder_nm * st.omega1 + tau.elbow_nm * (s * st.omega4);
    };

    double max_ke = 0.0;
    for (const JointState& st : traj.samples) max_ke = std::max(max_ke, kinetic(st));
    REQUIRE(max_ke > 1e-5);

    double work = 0.0;
    double prev_power = power(traj.samples[0]);
    const double ke0 = kinetic(traj.samples[0]);
    for (std::size_t i = 1; i < traj.samples.size(); ++i) {
        const double cur_power = power(traj.samples[i]);
        work += 0.5 * (prev_power + cur_power) * dt; // trapezoid
        prev_power = cur_power;
        if (i % 1000 == 0) {
            const double dke = kinetic(traj.samples[i]) - ke0;
            CHECK(std::abs(work - dke) <= 1e-6 * max_ke);
        }
    }
}
