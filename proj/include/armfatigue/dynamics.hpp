#pragma once

#include <vector>

#include "armfatigue/anthropometry.hpp"
#include "armfatigue/kinematics.hpp"

namespace armfatigue {

/// External loading on the arm.
///   hand_force_n - force the hand exerts on the environment along +x
///                  (push positive, pull negative); the reaction acts on
///                  the hand.
///   object_mass_kg - point mass rigidly carried at the hand point.
///   gravity_mps2 - gravity magnitude, acting along -y.
struct ExternalLoad {
    double hand_force_n = 0.0;
    double object_mass_kg = 0.0;
    double gravity_mps2 = 9.81;
};

/// Joint torque demands in N*m, conjugate to (theta1, q2) where q2 is the
/// branch-signed relative elbow angle. Positive = counterclockwise on the
/// distal side.
struct JointTorques {
    double shoulder_nm = 0.0;
    double elbow_nm = 0.0;
};

/// Torques required to realize the given state under the given load,
/// computed by the recursive Newton-Euler method (outward
/// velocity/acceleration pass, inward force/moment pass) on the two-link
/// chain with the object folded into the distal link.
JointTorques inverse_dynamics(const JointState& state, const BodySegmentSet& segments,
                              const ExternalLoad& load);

/// Same contract as inverse_dynamics, evaluated from the closed-form
/// Lagrangian equations of motion (mass matrix, Coriolis vector, gravity
/// vector, Jacobian-transpose hand force). Kept free of any code shared
/// with the Newton-Euler path so the two can check each other.
JointTorques lagrangian_torques(const JointState& state, const BodySegmentSet& segments,
                                const ExternalLoad& load);

/// Joint-space mass matrix in (theta1, q2) coordinates, object included.
/// Row-major {M11, M12, M21, M22}.
void mass_matrix(const JointState& state, const BodySegmentSet& segments,
                 double object_mass_kg, double out[4]);

/// Per-phase loads for alternating push/pull work.
struct PhaseLoads {
    ExternalLoad push;
    ExternalLoad pull;
};

/// One JointTorques per trajectory sample, selecting push/pull hand force by
/// the phase active at that sample's time (push during [0, t_push) of every
/// cycle of length t_push + t_pull).
std::vector<JointTorques> torque_series(const JointTrajectory& trajectory,
                                        const BodySegmentSet& segments,
                                        const PhaseLoads& loads, double t_push_s,
                                        double t_pull_s);

} // namespace armfatigue
