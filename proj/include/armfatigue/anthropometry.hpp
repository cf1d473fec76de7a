#pragma once

namespace armfatigue {

enum class Gender { male, female };

struct Subject {
    double height_m = 0.0;
    double body_mass_kg = 0.0;
    Gender gender = Gender::male;
};

/// Segment proportions as fractions of body height / body mass.
/// Defaults are standard biomechanics table values; every field can be
/// overridden from the scenario file. The forearm ratio describes the
/// elbow-to-hand-point distance, so its value depends on where the hand
/// point is taken (wrist vs. grip center vs. fingertip).
struct ProportionTable {
    double upper_arm_length_ratio = 0.186;
    double forearm_hand_length_ratio = 0.254;
    double upper_arm_mass_ratio = 0.028;
    double forearm_hand_mass_ratio = 0.022;
    double com_ratio_upper = 0.436;   // COM distance from proximal joint / segment length
    double com_ratio_forearm = 0.682;
    double gyration_ratio_upper = 0.322;  // radius of gyration about COM / segment length
    double gyration_ratio_forearm = 0.468;
};

/// Geometric and inertial parameters of the two-link arm.
/// Link 1 = upper arm (shoulder to elbow), link 2 = forearm(+hand) to the
/// hand point. A held object is NOT included here; it enters the dynamics
/// as a point mass at the hand.
struct BodySegmentSet {
    double L1_m = 0.0, L2_m = 0.0;   // segment lengths
    double m1_kg = 0.0, m2_kg = 0.0; // segment masses
    double r1_m = 0.0, r2_m = 0.0;   // proximal joint -> COM distances
    double I1_kgm2 = 0.0, I2_kgm2 = 0.0; // moments of inertia about each COM
};

/// Scale the proportion table by subject height and mass.
/// Throws ValidationError on non-positive height/mass or out-of-range ratios.
BodySegmentSet derive_segments(const Subject& subject, const ProportionTable& table);

} // namespace armfatigue
