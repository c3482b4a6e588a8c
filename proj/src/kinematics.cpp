#include "arm/kinematics.hpp"

#include <cmath>
#include <string>

namespace arm {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kBoundaryEps = 1e-9;

// Clamps acos arguments that drifted just past [-1, 1] at full extension.
double clamped_acos(double v) {
    if (v > 1.0 && v - 1.0 <= kBoundaryEps) v = 1.0;
    if (v < -1.0 && -1.0 - v <= kBoundaryEps) v = -1.0;
    return std::acos(v);
}

}  // namespace

TriangleAngles law_of_cosines_angles(double side_a, double side_b, double side_d) {
    if (side_a <= 0 || side_b <= 0 || side_d <= 0 ||
        side_a >= side_b + side_d || side_b >= side_a + side_d ||
        side_d >= side_a + side_b) {
        throw TriangleInequalityViolated(
            "sides (" + std::to_string(side_a) + ", " + std::to_string(side_b) +
            ", " + std::to_string(side_d) + ") do not form a triangle");
    }
    const double a2 = side_a * side_a;
    const double b2 = side_b * side_b;
    const double d2 = side_d * side_d;
    TriangleAngles t;
    t.alpha = clamped_acos((a2 + d2 - b2) / (2.0 * side_a * side_d));
    t.beta = clamped_acos((a2 + b2 - d2) / (2.0 * side_a * side_b));
    t.gamma = clamped_acos((b2 + d2 - a2) / (2.0 * side_b * side_d));
    return t;
}

ReachParameters reach_parameters(const CartesianPoint& p, const ArmGeometry& geom) {
    ReachParameters rp;
    rp.rho = std::hypot(p.x, p.y);
    const double dz = p.z - geom.c;
    rp.r = std::hypot(rp.rho, dz);
    if (rp.r < 1e-12) {
        throw DegenerateAtShoulder("target coincides with the shoulder pivot");
    }
    rp.u = (geom.a * geom.a - geom.b * geom.b + rp.r * rp.r) / (2.0 * rp.r);
    rp.g = std::atan2(dz, rp.rho);
    return rp;
}

JointAngles inverse_kinematics(const CartesianPoint& p, const ArmGeometry& geom) {
    const ReachParameters rp = reach_parameters(p, geom);
    const double reach_max = geom.a + geom.b;
    const double reach_min = std::fabs(geom.a - geom.b);
    if (rp.r > reach_max + kBoundaryEps || rp.r < reach_min - kBoundaryEps) {
        throw Unreachable("r=" + std::to_string(rp.r) + " outside [" +
                          std::to_string(reach_min) + ", " +
                          std::to_string(reach_max) + "]");
    }
    JointAngles j;
    j.theta0 = rp.rho < 1e-12 ? 0.0 : std::atan2(p.x, p.y);
    j.theta1 = rp.g + clamped_acos(rp.u / geom.a);
    j.theta2 = clamped_acos((geom.a * geom.a + geom.b * geom.b - rp.r * rp.r) /
                            (2.0 * geom.a * geom.b));
    j.theta3 = j.theta1 + j.theta2 - kPi;
    j.gripper = GripperState::Open;
    return j;
}

CartesianPoint forward_kinematics(const JointAngles& j, const ArmGeometry& geom) {
    const double wrist = j.theta1 + j.theta2 - kPi;
    const double rho = geom.a * std::cos(j.theta1) + geom.b * std::cos(wrist);
    CartesianPoint p;
    p.x = rho * std::sin(j.theta0);
    p.y = rho * std::cos(j.theta0);
    p.z = geom.c + geom.a * std::sin(j.theta1) + geom.b * std::sin(wrist);
    return p;
}

bool workspace_contains(const CartesianPoint& p, const ArmGeometry& geom) {
    try {
        const ReachParameters rp = reach_parameters(p, geom);
        return rp.r >= std::fabs(geom.a - geom.b) - kBoundaryEps &&
               rp.r <= geom.a + geom.b + kBoundaryEps;
    } catch (const DegenerateAtShoulder&) {
        return false;
    }
}

}  // namespace arm
