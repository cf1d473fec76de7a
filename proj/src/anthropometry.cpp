#include "armfatigue/anthropometry.hpp"

#include <string>

#include "armfatigue/errors.hpp"

namespace armfatigue {

namespace {

void check_ratio(double value, const char* name) {
    if (!(value > 0.0 && value < 1.0)) {
        throw ValidationError(std::string("proportion table: ") + name +
                              " must lie in (0, 1), got " + std::to_string(value));
    }
}

} // namespace

BodySegmentSet derive_segments(const Subject& subject, const ProportionTable& table) {
    if (!(subject.height_m > 0.0)) {
        throw ValidationError("subject: height must be > 0 m, got " +
                              std::to_string(subject.height_m));
    }
    if (!(subject.body_mass_kg > 0.0)) {
        throw ValidationError("subject: body mass must be > 0 kg, got " +
                              std::to_string(subject.body_mass_kg));
    }
    check_ratio(table.upper_arm_length_ratio, "upper_arm_length_ratio");
    check_ratio(table.forearm_hand_length_ratio, "forearm_hand_length_ratio");
    check_ratio(table.upper_arm_mass_ratio, "upper_arm_mass_ratio");
    check_ratio(table.forearm_hand_mass_ratio, "forearm_hand_mass_ratio");
    check_ratio(table.com_ratio_upper, "com_ratio_upper");
    check_ratio(table.com_ratio_forearm, "com_ratio_forearm");
    check_ratio(table.gyration_ratio_upper, "gyration_ratio_upper");
    check_ratio(table.gyration_ratio_forearm, "gyration_ratio_forearm");

    BodySegmentSet s;
    s.L1_m = table.upper_arm_length_ratio * subject.height_m;
    s.L2_m = table.forearm_hand_length_ratio * subject.height_m;
    s.m1_kg = table.upper_arm_mass_ratio * subject.body_mass_kg;
    s.m2_kg = table.forearm_hand_mass_ratio * subject.body_mass_kg;
    s.r1_m = table.com_ratio_upper * s.L1_m;
    s.r2_m = table.com_ratio_forearm * s.L2_m;
    const double k1 = table.gyration_ratio_upper * s.L1_m;
    const double k2 = table.gyration_ratio_forearm * s.L2_m;
    s.I1_kgm2 = s.m1_kg * k1 * k1;
    s.I2_kgm2 = s.m2_kg * k2 * k2;
    return s;
}

} // namespace armfatigue
