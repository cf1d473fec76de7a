#include "armfatigue/strength.hpp"

namespace armfatigue {

namespace {

constexpr double kRadToDeg = 57.29577951308232;

bool in_window(double deg) { return deg >= 0.0 && deg <= 180.0; }

} // namespace

GenderFactors default_gender_factors(Gender gender) {
    // Literature defaults; see README for provenance and calibration notes.
    return gender == Gender::male ? GenderFactors{0.1913, 0.2845}
                                  : GenderFactors{0.1005, 0.1495};
}

StrengthValue strength_elbow(double alpha_e_deg, double alpha_s_deg,
                             const StrengthModel& model) {
    const double g = model.g_elbow * model.g_multiplier;
    const double nm = (model.elbow_c0 + model.elbow_c1 * alpha_e_deg -
                       model.elbow_c2 * alpha_s_deg * alpha_s_deg) *
                      g;
    return {nm, in_window(alpha_e_deg) && in_window(alpha_s_deg)};
}

StrengthValue strength_shoulder(double alpha_e_deg, double alpha_s_deg,
                                const StrengthModel& model) {
    const double g = model.g_shoulder * model.g_multiplier;
    const double nm = (model.shoulder_d0 + model.shoulder_d1 * alpha_e_deg -
                       model.shoulder_d2 * alpha_s_deg) *
                      g;
    return {nm, in_window(alpha_e_deg) && in_window(alpha_s_deg)};
}

MvcPair mvc_at(const JointState& state, const StrengthModel& model) {
    double alpha_e, alpha_s;
    switch (model.mapping) {
    case AngleMapping::standard:
        alpha_e = state.theta1 * kRadToDeg;
        alpha_s = 180.0 - state.theta4 * kRadToDeg;
        break;
    case AngleMapping::anatomical:
        alpha_e = state.theta4 * kRadToDeg;
        alpha_s = 90.0 + state.theta1 * kRadToDeg;
        break;
    default:
        alpha_e = alpha_s = 0.0;
    }
    return {strength_shoulder(alpha_e, alpha_s, model),
            strength_elbow(alpha_e, alpha_s, model)};
}

} // namespace armfatigue
