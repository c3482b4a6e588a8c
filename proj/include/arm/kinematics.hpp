#pragma once

#include "arm/errors.hpp"

namespace arm {

// Segment lengths in cm: a and b are the two arm links, c is the vertical
// offset of the shoulder pivot above the base plane.
struct ArmGeometry {
    double a;
    double b;
    double c;
};

inline constexpr ArmGeometry kDefaultGeometry{14.9, 14.6, 5.4};

// Base frame: origin at the base pivot on the table plane, +z up, +y forward,
// +x right. All lengths in cm.
struct CartesianPoint {
    double x;
    double y;
    double z;
};

enum class GripperState { Open, Closed };

// Angles in radians. theta0 is base yaw measured from +y toward +x,
// theta1 is shoulder elevation from horizontal, theta2 is the interior
// elbow angle between the two links, theta3 = theta1 + theta2 - pi.
struct JointAngles {
    double theta0;
    double theta1;
    double theta2;
    double theta3;
    GripperState gripper = GripperState::Open;
};

struct ReachParameters {
    double rho;  // horizontal radius, cm
    double r;    // shoulder-to-target distance, cm
    double u;    // law-of-cosines projection of link a onto r, cm
    double g;    // elevation angle of the target above horizontal, rad
};

// Interior angles of a triangle with sides A, B, D.
// alpha is opposite B, beta opposite D, gamma opposite A.
struct TriangleAngles {
    double alpha;
    double beta;
    double gamma;
};

TriangleAngles law_of_cosines_angles(double side_a, double side_b, double side_d);

ReachParameters reach_parameters(const CartesianPoint& p, const ArmGeometry& geom);

// Elbow-up analytic solution. Throws Unreachable or DegenerateAtShoulder.
JointAngles inverse_kinematics(const CartesianPoint& p, const ArmGeometry& geom);

CartesianPoint forward_kinematics(const JointAngles& j, const ArmGeometry& geom);

bool workspace_contains(const CartesianPoint& p, const ArmGeometry& geom);

}  // namespace arm
