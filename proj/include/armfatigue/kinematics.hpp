#pragma once

#include <vector>

#include "armfatigue/anthropometry.hpp"

namespace armfatigue {

/// Elbow fold side. For the same hand point the planar two-link arm admits
/// two mirror configurations; the branch names which side of the
/// shoulder-to-hand chord the elbow sits on (elbow_down = below the chord,
/// the natural posture when pushing with the hand at or below shoulder
/// height).
enum class Branch { elbow_down, elbow_up };

/// Joint-space state of the planar shoulder-elbow chain.
///
/// Angle conventions:
///   theta1 - upper arm angle from the horizontal +x axis at the shoulder,
///            radians, negative below horizontal.
///   theta4 - included elbow angle between upper arm and forearm, radians,
///            in (0, pi); pi = fully extended. The included angle is
///            fold-agnostic, so the state also carries the branch.
/// Rates omega*/alpha* are time derivatives of the two angles.
struct JointState {
    double theta1 = 0.0;
    double theta4 = 3.141592653589793;
    double omega1 = 0.0, omega4 = 0.0;
    double alpha1 = 0.0, alpha4 = 0.0;
    Branch branch = Branch::elbow_up;
};

struct HandPosition {
    double x_m = 0.0;
    double y_m = 0.0;
};

enum class PathProfile { cosine_smooth, constant_velocity };

/// Straight horizontal hand path, swept back and forth.
/// One full stroke cycle (out and back) takes stroke_period seconds; the
/// outward leg x_start -> x_end occupies the first half of the cycle.
struct HandPath {
    double x_start_m = 0.0;
    double x_end_m = 0.0;
    double y_hand_m = 0.0;  // vertical offset of the hand point from the shoulder, signed
    PathProfile profile = PathProfile::cosine_smooth;
    double stroke_period_s = 0.0;
};

/// Uniformly sampled joint trajectory; sample i is at time i * dt.
struct JointTrajectory {
    double dt_s = 0.0;
    Branch branch = Branch::elbow_up;
    std::vector<JointState> samples;
};

/// Signed relative forearm angle q2 such that the forearm's absolute angle
/// is theta1 + q2. elbow_up: q2 = theta4 - pi; elbow_down: q2 = pi - theta4.
double relative_elbow_angle(double theta4, Branch branch);

/// +1 for elbow_up, -1 for elbow_down (the sign s in q2 = s*(theta4 - pi)).
double branch_sign(Branch branch);

/// Hand position with the shoulder at the origin:
///   x = L1 cos(theta1) + L2 cos(theta1 + q2), likewise for y,
/// where q2 is the branch-signed relative elbow angle. For elbow_up this is
/// exactly x = L1 cos(theta1) + L2 cos(theta1 + theta4 - pi).
HandPosition forward_kinematics(const JointState& state, const BodySegmentSet& segments);

/// Closed-form inverse kinematics on the requested branch. The returned
/// state has zero rates. Throws UnreachableTargetError outside the annulus
/// |L1 - L2| < r < L1 + L2 and SingularPostureError on its boundary.
JointState inverse_kinematics(const HandPosition& hand, const BodySegmentSet& segments,
                              Branch branch);

/// Analytic hand x-position and its first two time derivatives at time t.
void hand_motion_at(const HandPath& path, double t_s, double& x_m, double& vx_mps,
                    double& ax_mps2);

/// Full joint state on the path at time t: IK for the angles, analytic
/// profile derivatives mapped through the Jacobian and its time derivative
/// for the rates (never finite differences).
JointState path_state_at(const HandPath& path, const BodySegmentSet& segments,
                         Branch branch, double t_s);

/// Sample the path at dt intervals over [0, duration].
JointTrajectory generate_trajectory(const HandPath& path, const BodySegmentSet& segments,
                                    double dt_s, double duration_s, Branch branch);

} // namespace armfatigue
