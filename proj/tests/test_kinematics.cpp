#include <cmath>
#include <random>

#include <doctest.h>

#include "arm/kinematics.hpp"

using namespace arm;

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr ArmGeometry kGeom{14.9, 14.6, 5.4};

// Independent planar-chain evaluation, kept separate from the library FK so
// the round-trip tests have a second route.
CartesianPoint fk_oracle(double t0, double t1, double t2, const ArmGeometry& g) {
    const double wrist = t1 + t2 - kPi;
    const double rho = g.a * std::cos(t1) + g.b * std::cos(wrist);
    const double z = g.c + g.a * std::sin(t1) + g.b * std::sin(wrist);
    return {rho * std::sin(t0), rho * std::cos(t0), z};
}

double dist(const CartesianPoint& p, const CartesianPoint& q) {
    return std::sqrt((p.x - q.x) * (p.x - q.x) + (p.y - q.y) * (p.y - q.y) +
                     (p.z - q.z) * (p.z - q.z));
}

// Reachable point sampled through the oracle chain, never through the IK.
CartesianPoint random_reachable(std::mt19937& rng) {
    std::uniform_real_distribution<double> yaw(-kPi * 0.95, kPi * 0.95);
    std::uniform_real_distribution<double> shoulder(-kPi / 2 + 0.05, kPi - 0.05);
    std::uniform_real_distribution<double> elbow(0.05, kPi - 0.05);
    return fk_oracle(yaw(rng), shoulder(rng), elbow(rng), kGeom);
}

}  // namespace

TEST_CASE("law of cosines: equilateral triangle") {
    const TriangleAngles t = law_of_cosines_angles(1, 1, 1);
    CHECK(t.alpha == doctest::Approx(kPi / 3).epsilon(1e-12));
    CHECK(t.beta == doctest::Approx(kPi / 3).epsilon(1e-12));
    CHECK(t.gamma == doctest::Approx(kPi / 3).epsilon(1e-12));
}

TEST_CASE("law of cosines: 3-4-5 right triangle") {
    const TriangleAngles t = law_of_cosines_angles(3, 4, 5);
    CHECK(t.alpha == doctest::Approx(std::acos(0.6)).epsilon(1e-12));
    CHECK(std::fabs(t.beta - kPi / 2) < 1e-12);
    CHECK(t.gamma == doctest::Approx(std::acos(0.8)).epsilon(1e-12));
}

TEST_CASE("law of cosines: degenerate collinear sides") {
    CHECK_THROWS_AS(law_of_cosines_angles(1, 1, 2), TriangleInequalityViolated);
    CHECK_THROWS_AS(law_of_cosines_angles(5, 1, 1), TriangleInequalityViolated);
    CHECK_THROWS_AS(law_of_cosines_angles(0, 1, 1), TriangleInequalityViolated);
}

TEST_CASE("law of cosines: angle sum is pi for random valid triangles") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> side(0.1, 100.0);
    int checked = 0;
    while (checked < 2000) {
        const double a = side(rng), b = side(rng), d = side(rng);
        if (a >= b + d || b >= a + d || d >= a + b) continue;
        const TriangleAngles t = law_of_cosines_angles(a, b, d);
        CHECK(std::fabs(t.alpha + t.beta + t.gamma - kPi) < 1e-9);
        ++checked;
    }
}

TEST_CASE("reach parameters: straight horizontal reach") {
    const ReachParameters rp =
        reach_parameters({0, kGeom.a + kGeom.b, kGeom.c}, kGeom);
    CHECK(rp.rho == doctest::Approx(kGeom.a + kGeom.b).epsilon(1e-12));
    CHECK(rp.r == doctest::Approx(kGeom.a + kGeom.b).epsilon(1e-12));
    CHECK(rp.g == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("reach parameters: shoulder pivot is degenerate") {
    CHECK_THROWS_AS(reach_parameters({0, 0, kGeom.c}, kGeom), DegenerateAtShoulder);
}

TEST_CASE("reach parameters: straight up gives g = +pi/2") {
    const ReachParameters rp = reach_parameters({0, 0, kGeom.c + 10}, kGeom);
    CHECK(rp.g == doctest::Approx(kPi / 2).epsilon(1e-12));
}

TEST_CASE("reach parameters match direct formula re-evaluation") {
    // Frozen from an independent evaluation of the three formulas:
    // rho = sqrt(10^2+10^2), r = sqrt(rho^2 + (2-5.4)^2),
    // u = (14.9^2 - 14.6^2 + r^2) / (2r), g = atan2(2-5.4, rho).
    const ReachParameters rp = reach_parameters({10, 10, 2}, kGeom);
    CHECK(rp.rho == doctest::Approx(14.142135623730951).epsilon(1e-12));
    CHECK(rp.r == doctest::Approx(14.545102268461369).epsilon(1e-12));
    CHECK(rp.u == doctest::Approx(7.576777252296206).epsilon(1e-12));
    CHECK(rp.g == doctest::Approx(-0.2359385758953321).epsilon(1e-12));
}

TEST_CASE("forward kinematics: straight arm poses") {
    const CartesianPoint straight = forward_kinematics({0, 0, kPi, 0}, kGeom);
    CHECK(dist(straight, {0, kGeom.a + kGeom.b, kGeom.c}) < 1e-12);
    const CartesianPoint up = forward_kinematics({0, kPi / 2, kPi, kPi / 2}, kGeom);
    CHECK(dist(up, {0, 0, kGeom.c + kGeom.a + kGeom.b}) < 1e-12);
}

TEST_CASE("forward kinematics agrees with independent trig evaluation") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> yaw(-kPi, kPi);
    std::uniform_real_distribution<double> shoulder(-kPi / 2, kPi);
    std::uniform_real_distribution<double> elbow(0.01, kPi);
    for (int i = 0; i < 500; ++i) {
        const double t0 = yaw(rng), t1 = shoulder(rng), t2 = elbow(rng);
        const CartesianPoint got =
            forward_kinematics({t0, t1, t2, t1 + t2 - kPi}, kGeom);
        CHECK(dist(got, fk_oracle(t0, t1, t2, kGeom)) < 1e-12);
    }
}

TEST_CASE("inverse kinematics: fully extended straight arm") {
    const JointAngles j =
        inverse_kinematics({0, kGeom.a + kGeom.b, kGeom.c}, kGeom);
    CHECK(std::fabs(j.theta0) < 1e-9);
    CHECK(std::fabs(j.theta1) < 1e-6);
    CHECK(j.theta2 == doctest::Approx(kPi).epsilon(1e-6));
    CHECK(std::fabs(j.theta3) < 1e-5);
}

TEST_CASE("inverse kinematics: unreachable targets") {
    CHECK_THROWS_AS(inverse_kinematics({0, 100, 0}, kGeom), Unreachable);
    CHECK_THROWS_AS(inverse_kinematics({0, 0.05, kGeom.c}, kGeom), Unreachable);
}

TEST_CASE("inverse kinematics round-trips through FK") {
    const JointAngles j = inverse_kinematics({10, 10, 2}, kGeom);
    CHECK(dist(forward_kinematics(j, kGeom), {10, 10, 2}) < 1e-6);

    std::mt19937 rng(23);
    for (int i = 0; i < 1000; ++i) {
        const CartesianPoint p = random_reachable(rng);
        if (!workspace_contains(p, kGeom)) continue;
        const JointAngles ik = inverse_kinematics(p, kGeom);
        CHECK(dist(forward_kinematics(ik, kGeom), p) < 1e-6);
        CHECK(ik.theta2 > 0.0);
        CHECK(ik.theta2 <= kPi);
        CHECK(std::fabs(ik.theta3 - (ik.theta1 + ik.theta2 - kPi)) < 1e-12);
    }
}

TEST_CASE("inverse kinematics: target directly above base uses yaw 0") {
    const JointAngles j = inverse_kinematics({0, 0, kGeom.c + 20}, kGeom);
    CHECK(j.theta0 == 0.0);
    CHECK(dist(forward_kinematics(j, kGeom), {0, 0, kGeom.c + 20}) < 1e-6);
}

TEST_CASE("elbow angle is strictly increasing in reach distance") {
    const double lo = std::fabs(kGeom.a - kGeom.b);
    const double hi = kGeom.a + kGeom.b;
    double prev = -1.0;
    for (int i = 1; i < 200; ++i) {
        const double r = lo + (hi - lo) * i / 200.0;
        const JointAngles j = inverse_kinematics({0, r, kGeom.c}, kGeom);
        CHECK(j.theta2 > prev);
        prev = j.theta2;
    }
}

TEST_CASE("yaw invariance under rotation about z") {
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> phi_dist(-1.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        const CartesianPoint p = random_reachable(rng);
        if (p.x * p.x + p.y * p.y < 1e-6) continue;
        const double phi = phi_dist(rng);
        // Rotation from +y toward +x, matching the theta0 convention.
        const CartesianPoint q{p.x * std::cos(phi) + p.y * std::sin(phi),
                               -p.x * std::sin(phi) + p.y * std::cos(phi), p.z};
        const JointAngles jp = inverse_kinematics(p, kGeom);
        const JointAngles jq = inverse_kinematics(q, kGeom);
        double dyaw = jq.theta0 - jp.theta0 - phi;
        dyaw = std::remainder(dyaw, 2 * kPi);
        CHECK(std::fabs(dyaw) < 1e-9);
        CHECK(std::fabs(jq.theta1 - jp.theta1) < 1e-9);
        CHECK(std::fabs(jq.theta2 - jp.theta2) < 1e-9);
    }
}

TEST_CASE("u stays within [-a, a] and round-trips through acos") {
    std::mt19937 rng(37);
    for (int i = 0; i < 500; ++i) {
        const CartesianPoint p = random_reachable(rng);
        const ReachParameters rp = reach_parameters(p, kGeom);
        CHECK(rp.u <= kGeom.a + 1e-9);
        CHECK(rp.u >= -kGeom.a - 1e-9);
        const double clamped = std::min(std::max(rp.u / kGeom.a, -1.0), 1.0);
        CHECK(kGeom.a * std::cos(std::acos(clamped)) ==
              doctest::Approx(std::min(std::max(rp.u, -kGeom.a), kGeom.a)).epsilon(1e-9));
    }
}

TEST_CASE("workspace membership matches IK success on a dense grid") {
    for (double x = -35; x <= 35; x += 5) {
        for (double y = -35; y <= 35; y += 5) {
            for (double z = -35; z <= 35; z += 5) {
                const CartesianPoint p{x, y, z};
                bool ik_ok = true;
                try {
                    inverse_kinematics(p, kGeom);
                } catch (const Error&) {
                    ik_ok = false;
                }
                CHECK(workspace_contains(p, kGeom) == ik_ok);
            }
        }
    }
    CHECK(workspace_contains({0, kGeom.a + kGeom.b, kGeom.c}, kGeom));
    CHECK_FALSE(workspace_contains({0, 2 * (kGeom.a + kGeom.b), kGeom.c}, kGeom));
}
