#include <cmath>

#include <doctest.h>

#include "arm/world.hpp"

using namespace arm;

namespace {

constexpr double kPi = 3.14159265358979323846;

World make_world() {
    World w;
    w.camera = {600.0, 1280, 720, {0, 0, 0}, 0.0, 1.0};
    w.objects.push_back({1, "bottle", {10, 12, 2}, 4, 12, 0.87});
    return w;
}

double dist(const CartesianPoint& a, const CartesianPoint& b) {
    return std::sqrt((a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y) +
                     (a.z - b.z) * (a.z - b.z));
}

}  // namespace

TEST_CASE("tick with no commands only advances time") {
    const World w0 = make_world();
    const World w1 = tick(w0, {});
    CHECK(w1.tick_count == w0.tick_count + 1);
    CHECK(w1.arm_pose.theta1 == w0.arm_pose.theta1);
    CHECK(w1.objects.size() == w0.objects.size());
}

TEST_CASE("joint commands teleport the arm") {
    World w = make_world();
    const JointAngles pose{0.3, 0.5, 2.0, 0.5 + 2.0 - kPi};
    w = tick(std::move(w), {Command::joint_target(pose)});
    CHECK(w.arm_pose.theta0 == pose.theta0);
    CHECK(w.arm_pose.theta1 == pose.theta1);
    CHECK(w.arm_pose.theta2 == pose.theta2);
}

TEST_CASE("close attaches only within the reach tolerance") {
    World w = make_world();
    const JointAngles at_obj = inverse_kinematics({10, 12, 2}, w.geom);
    w = tick(std::move(w), {Command::joint_target(at_obj)});
    SUBCASE("near object attaches") {
        w = tick(std::move(w), {Command::gripper(GripperAction::Close)});
        REQUIRE(w.held_object.has_value());
        CHECK(*w.held_object == 1);
        CHECK(sensor_snapshot(w).pressure.current ==
              w.pressure_baseline + w.grip_delta);
    }
    SUBCASE("far object does not attach") {
        const JointAngles away = inverse_kinematics({-10, 12, 2}, w.geom);
        w = tick(std::move(w), {Command::joint_target(away)});
        w = tick(std::move(w), {Command::gripper(GripperAction::Close)});
        CHECK_FALSE(w.held_object.has_value());
        CHECK(sensor_snapshot(w).pressure.current == w.pressure_baseline);
    }
}

TEST_CASE("held object tracks the end effector exactly") {
    World w = make_world();
    w = tick(std::move(w), {Command::joint_target(inverse_kinematics({10, 12, 2}, w.geom))});
    w = tick(std::move(w), {Command::gripper(GripperAction::Close)});
    REQUIRE(w.held_object.has_value());
    const JointAngles home = inverse_kinematics({0, 20, 5.4}, w.geom);
    w = tick(std::move(w), {Command::joint_target(home)});
    CHECK(dist(w.objects[0].position, end_effector(w)) == 0.0);
    // Releasing leaves the object at the drop coordinates.
    w = tick(std::move(w), {Command::gripper(GripperAction::Open)});
    const CartesianPoint dropped = w.objects[0].position;
    w = tick(std::move(w), {Command::joint_target(inverse_kinematics({5, 15, 4}, w.geom))});
    CHECK(dist(w.objects[0].position, dropped) == 0.0);
}

TEST_CASE("object count is conserved and at most one object is held") {
    World w = make_world();
    w.objects.push_back({2, "bottle", {10.4, 12, 2}, 4, 12, 0.9});
    const std::size_t count = w.objects.size();
    w = tick(std::move(w), {Command::joint_target(inverse_kinematics({10, 12, 2}, w.geom))});
    w = tick(std::move(w), {Command::gripper(GripperAction::Close)});
    CHECK(w.objects.size() == count);
    REQUIRE(w.held_object.has_value());
    CHECK(*w.held_object == 1);  // nearest wins
    // Second close while holding keeps the same object.
    w = tick(std::move(w), {Command::gripper(GripperAction::Close)});
    CHECK(*w.held_object == 1);
}

TEST_CASE("sensor snapshot of an empty world") {
    World w = make_world();
    w.objects.clear();
    const SensorSnapshot snap = sensor_snapshot(w);
    CHECK(snap.detections.empty());
    CHECK(snap.pressure.current == w.pressure_baseline);
    CHECK(snap.ultrasonic.echo_round_trip == 0.0);
}

TEST_CASE("sensor snapshot sees one in-view object") {
    const SensorSnapshot snap = sensor_snapshot(make_world());
    REQUIRE(snap.detections.size() == 1);
    CHECK(snap.detections[0].similarity == 0.87);
    CHECK(snap.detections[0].source_id == 1);
    REQUIRE(snap.hints.count(1) == 1);
    CHECK(snap.hints.at(1).width == 4.0);
    CHECK(snap.hints.at(1).z == 2.0);
}

TEST_CASE("snapshot feeds the perception pipeline back to the object") {
    const World w = make_world();
    const SensorSnapshot snap = sensor_snapshot(w);
    const DetectedObject& d = snap.detections[0];
    const double range =
        estimate_distance(snap.hints.at(1).width, w.camera.focal_px, d.apparent_size);
    const CartesianPoint back = camera_to_base(d, range, w.camera, snap.hints.at(1).z);
    CHECK(std::fabs(back.x - 10.0) < 1e-6);
    CHECK(std::fabs(back.y - 12.0) < 1e-6);
}

TEST_CASE("ultrasonic snapshot measures end effector to nearest object") {
    World w = make_world();
    w = tick(std::move(w), {Command::joint_target(inverse_kinematics({10, 12, 2}, w.geom))});
    const double d = ultrasonic_distance(sensor_snapshot(w).ultrasonic);
    CHECK(d < 1e-5);  // IK lands within round-trip tolerance of the object
}
