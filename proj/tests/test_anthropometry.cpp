#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "armfatigue/anthropometry.hpp"
#include "armfatigue/errors.hpp"

using namespace armfatigue;

TEST_CASE("derive_segments scales the default table by height and mass") {
    const Subject subject{1.88, 90.0, Gender::male};
    const BodySegmentSet s = derive_segments(subject, ProportionTable{});

    // 0.186 * 1.88 and 0.028 * 90, straight multiplications
    CHECK(s.L1_m == doctest::Approx(0.34968).epsilon(1e-12));
    CHECK(s.m1_kg == doctest::Approx(2.52).epsilon(1e-12));
    CHECK(s.L2_m == doctest::Approx(0.254 * 1.88).epsilon(1e-12));
    CHECK(s.m2_kg == doctest::Approx(0.022 * 90.0).epsilon(1e-12));
}

TEST_CASE("doubling height doubles lengths exactly") {
    const ProportionTable table;
    const BodySegmentSet a = derive_segments({1.7, 80.0, Gender::female}, table);
    const BodySegmentSet b = derive_segments({3.4, 80.0, Gender::female}, table);
    CHECK(b.L1_m == 2.0 * a.L1_m);
    CHECK(b.L2_m == 2.0 * a.L2_m);
    CHECK(b.m1_kg == a.m1_kg);
}

TEST_CASE("non-positive subject data is rejected") {
    CHECK_THROWS_AS(derive_segments({0.0, 80.0, Gender::male}, ProportionTable{}),
                    ValidationError);
    CHECK_THROWS_AS(derive_segments({-1.7, 80.0, Gender::male}, ProportionTable{}),
                    ValidationError);
    CHECK_THROWS_AS(derive_segments({1.7, 0.0, Gender::male}, ProportionTable{}),
                    ValidationError);
    CHECK_THROWS_AS(derive_segments({1.7, 80.0, Gender::male}, ProportionTable{0.0}),
                    ValidationError);
}

TEST_CASE("output invariants and homogeneity hold for random subjects and tables") {
    std::mt19937_64 rng(20240811);
    std::uniform_real_distribution<double> height(1.2, 2.2);
    std::uniform_real_distribution<double> mass(40.0, 150.0);
    std::uniform_real_distribution<double> ratio(0.05, 0.95);
    std::uniform_real_distribution<double> scale(0.5, 2.0);

    for (int i = 0; i < 500; ++i) {
        ProportionTable t;
        t.upper_arm_length_ratio = ratio(rng);
        t.forearm_hand_length_ratio = ratio(rng);
        t.upper_arm_mass_ratio = ratio(rng);
        t.forearm_hand_mass_ratio = ratio(rng);
        t.com_ratio_upper = ratio(rng);
        t.com_ratio_forearm = ratio(rng);
        t.gyration_ratio_upper = ratio(rng);
        t.gyration_ratio_forearm = ratio(rng);
        const Subject subj{height(rng), mass(rng), Gender::male};

        const BodySegmentSet s = derive_segments(subj, t);
        CHECK(s.L1_m > 0.0);
        CHECK(s.L2_m > 0.0);
        CHECK(s.m1_kg > 0.0);
        CHECK(s.m2_kg > 0.0);
        CHECK(s.r1_m > 0.0);
        CHECK(s.r2_m > 0.0);
        CHECK(s.I1_kgm2 > 0.0);
        CHECK(s.I2_kgm2 > 0.0);
        CHECK(s.r1_m < s.L1_m);
        CHECK(s.r2_m < s.L2_m);

        // degree-1 homogeneity in height (lengths) and mass (masses)
        const double lam = scale(rng);
        const BodySegmentSet sh =
            derive_segments({subj.height_m * lam, subj.body_mass_kg, subj.gender}, t);
        CHECK(sh.L1_m == doctest::Approx(lam * s.L1_m).epsilon(1e-12));
        CHECK(sh.L2_m == doctest::Approx(lam * s.L2_m).epsilon(1e-12));
        CHECK(sh.m1_kg == doctest::Approx(s.m1_kg).epsilon(1e-12));
        const BodySegmentSet sm =
            derive_segments({subj.height_m, subj.body_mass_kg * lam, subj.gender}, t);
        CHECK(sm.m1_kg == doctest::Approx(lam * s.m1_kg).epsilon(1e-12));
        CHECK(sm.m2_kg == doctest::Approx(lam * s.m2_kg).epsilon(1e-12));
        CHECK(sm.L1_m == doctest::Approx(s.L1_m).epsilon(1e-12));
    }
}
