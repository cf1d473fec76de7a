#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "armfatigue/anthropometry.hpp"
#include "armfatigue/kinematics.hpp"
#include "armfatigue/strength.hpp"

using namespace armfatigue;

namespace {

StrengthModel unit_model() {
    StrengthModel m; // printed coefficients, G = 1
    return m;
}

} // namespace

TEST_CASE("regressions evaluate the printed coefficients verbatim") {
    const StrengthModel m = unit_model();

    // (336.29 + 1.544*90 - 0.0085*90^2) = 406.40
    CHECK(strength_elbow(90.0, 90.0, m).nm == doctest::Approx(406.40).epsilon(1e-12));
    // (227.338 + 0.525*90 - 0.296*90) = 247.948
    CHECK(strength_shoulder(90.0, 90.0, m).nm == doctest::Approx(247.948).epsilon(1e-12));
    CHECK(strength_elbow(0.0, 0.0, m).nm == doctest::Approx(336.29).epsilon(1e-12));
    CHECK(strength_shoulder(0.0, 0.0, m).nm == doctest::Approx(227.338).epsilon(1e-12));
}

TEST_CASE("gender factor scales multiplicatively") {
    StrengthModel m = unit_model();
    m.g_elbow = 0.0;
    m.g_shoulder = 0.0;
    CHECK(strength_elbow(45.0, 120.0, m).nm == 0.0);
    CHECK(strength_shoulder(45.0, 120.0, m).nm == 0.0);

    StrengthModel a = unit_model();
    a.g_elbow = 0.3;
    a.g_shoulder = 0.4;
    StrengthModel b = a;
    b.g_elbow *= 2.0;
    b.g_shoulder *= 2.0;
    CHECK(strength_elbow(30.0, 60.0, b).nm ==
          doctest::Approx(2.0 * strength_elbow(30.0, 60.0, a).nm).epsilon(1e-14));
    CHECK(strength_shoulder(30.0, 60.0, b).nm ==
          doctest::Approx(2.0 * strength_shoulder(30.0, 60.0, a).nm).epsilon(1e-14));
}

TEST_CASE("angles outside 0-180 deg flag the result but still evaluate") {
    const StrengthModel m = unit_model();
    CHECK(strength_elbow(90.0, 90.0, m).in_window);
    CHECK_FALSE(strength_elbow(-10.0, 90.0, m).in_window);
    CHECK_FALSE(strength_shoulder(90.0, 181.0, m).in_window);
    CHECK(strength_elbow(-10.0, 90.0, m).nm ==
          doctest::Approx(336.29 - 15.44 - 68.85).epsilon(1e-12));
}

TEST_CASE("mvc_at composes the configured mapping with the regressions") {
    StrengthModel m = unit_model();
    m.g_elbow = 0.19;
    m.g_shoulder = 0.28;

    JointState st;
    st.theta1 = -0.85;
    st.theta4 = 1.1;
    st.branch = Branch::elbow_down;

    SUBCASE("standard mapping: alpha_e = theta1, alpha_s = 180 - theta4") {
        m.mapping = AngleMapping::standard;
        const double deg = 180.0 / 3.141592653589793;
        const double alpha_e = st.theta1 * deg;
        const double alpha_s = 180.0 - st.theta4 * deg;
        const MvcPair got = mvc_at(st, m);
        CHECK(got.elbow.nm == strength_elbow(alpha_e, alpha_s, m).nm);
        CHECK(got.shoulder.nm == strength_shoulder(alpha_e, alpha_s, m).nm);
    }
    SUBCASE("anatomical mapping: alpha_e = theta4, alpha_s = 90 + theta1") {
        m.mapping = AngleMapping::anatomical;
        const double deg = 180.0 / 3.141592653589793;
        const MvcPair got = mvc_at(st, m);
        CHECK(got.elbow.nm == strength_elbow(st.theta4 * deg, 90.0 + st.theta1 * deg, m).nm);
        CHECK(got.shoulder.nm ==
              strength_shoulder(st.theta4 * deg, 90.0 + st.theta1 * deg, m).nm);
    }
}

TEST_CASE("MVC stays positive and continuous over the case-study posture sweep") {
    ProportionTable t;
    t.forearm_hand_length_ratio = 0.146;
    const BodySegmentSet seg = derive_segments({1.88, 90.0, Gender::male}, t);

    StrengthModel m = unit_model();
    const GenderFactors gf = default_gender_factors(Gender::male);
    m.g_elbow = gf.elbow;
    m.g_shoulder = gf.shoulder;
    m.g_multiplier = 0.84;

    double prev_s = 0.0, prev_e = 0.0;
    for (int i = 0; i <= 200; ++i) {
        const double x = 0.3 + 0.1 * i / 200.0;
        const JointState st = inverse_kinematics({x, 0.0}, seg, Branch::elbow_down);
        const MvcPair mvc = mvc_at(st, m);
        CHECK(mvc.shoulder.nm > 0.0);
        CHECK(mvc.elbow.nm > 0.0);
        if (i > 0) {
            CHECK(std::abs(mvc.shoulder.nm - prev_s) < 0.5);
            CHECK(std::abs(mvc.elbow.nm - prev_e) < 0.5);
        }
        prev_s = mvc.shoulder.nm;
        prev_e = mvc.elbow.nm;
    }
}

TEST_CASE("positive scaling preserves the argmax posture of each regression") {
    const StrengthModel male{336.29, 1.544, 0.0085, 227.338,
                             0.525,  0.296, 0.1913, 0.2845};
    StrengthModel female = male;
    female.g_elbow = 0.1005;
    female.g_shoulder = 0.1495;

    int male_best = -1, female_best = -1;
    double male_max = -1e300, female_max = -1e300;
    for (int i = 0; i <= 180; i += 5) {
        const double v_m = strength_elbow(i, 180.0 - i, male).nm;
        const double v_f = strength_elbow(i, 180.0 - i, female).nm;
        if (v_m > male_max) {
            male_max = v_m;
            male_best = i;
        }
        if (v_f > female_max) {
            female_max = v_f;
            female_best = i;
        }
    }
    CHECK(male_best == female_best);
}
