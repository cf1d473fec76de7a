#pragma once

#include "armfatigue/kinematics.hpp"

namespace armfatigue {

/// How joint-space state maps to the regression input angles
/// (alpha_e, alpha_s), both in degrees.
///   standard   - alpha_e = theta1, alpha_s = 180 - theta4. This is the
///                mapping the regression coefficients below were fitted
///                against in this tool's reference configuration.
///   anatomical - alpha_e = theta4 (included elbow angle),
///                alpha_s = 90 + theta1 (shoulder elevation from hanging).
enum class AngleMapping { standard, anatomical };

/// Posture-dependent maximum voluntary contraction (MVC) torque model:
///   elbow:    (c0 + c1 * alpha_e - c2 * alpha_s^2) * G_elbow
///   shoulder: (d0 + d1 * alpha_e - d2 * alpha_s)   * G_shoulder
/// Angles in degrees, results in N*m. G factors scale the regressions per
/// gender; g_multiplier is an extra calibration knob applied on top.
struct StrengthModel {
    double elbow_c0 = 336.29, elbow_c1 = 1.544, elbow_c2 = 0.0085;
    double shoulder_d0 = 227.338, shoulder_d1 = 0.525, shoulder_d2 = 0.296;
    double g_elbow = 1.0;
    double g_shoulder = 1.0;
    double g_multiplier = 1.0;
    AngleMapping mapping = AngleMapping::standard;
};

/// Literature default gender factors.
struct GenderFactors {
    double elbow = 1.0;
    double shoulder = 1.0;
};
GenderFactors default_gender_factors(Gender gender);

/// Torque value plus a validity flag; angles outside the documented 0-180
/// degree regression window yield a value anyway, flagged out-of-window.
struct StrengthValue {
    double nm = 0.0;
    bool in_window = true;
};

StrengthValue strength_elbow(double alpha_e_deg, double alpha_s_deg,
                             const StrengthModel& model);
StrengthValue strength_shoulder(double alpha_e_deg, double alpha_s_deg,
                                const StrengthModel& model);

struct MvcPair {
    StrengthValue shoulder;
    StrengthValue elbow;
};

/// Map the joint state through the configured AngleMapping and evaluate both
/// regressions.
MvcPair mvc_at(const JointState& state, const StrengthModel& model);

} // namespace armfatigue
