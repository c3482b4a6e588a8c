#include "arm/world.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace arm {
namespace {

double distance3(const CartesianPoint& a, const CartesianPoint& b) {
    return std::sqrt((a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y) +
                     (a.z - b.z) * (a.z - b.z));
}

// Nearest object index by distance to the end effector, ties by lowest id.
std::optional<std::size_t> nearest_object(const World& w, const CartesianPoint& ee) {
    std::optional<std::size_t> best;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < w.objects.size(); ++i) {
        const double d = distance3(w.objects[i].position, ee);
        if (d < best_d || (d == best_d && best && w.objects[i].id < w.objects[*best].id)) {
            best_d = d;
            best = i;
        }
    }
    return best;
}

}  // namespace

CartesianPoint end_effector(const World& w) {
    return forward_kinematics(w.arm_pose, w.geom);
}

World attach_detach(World w, GripperAction action) {
    if (action == GripperAction::Close) {
        w.arm_pose.gripper = GripperState::Closed;
        if (!w.held_object) {
            const CartesianPoint ee = end_effector(w);
            const auto idx = nearest_object(w, ee);
            if (idx && distance3(w.objects[*idx].position, ee) <= w.reach_tolerance) {
                w.held_object = w.objects[*idx].id;
            }
        }
    } else {
        w.arm_pose.gripper = GripperState::Open;
        w.held_object.reset();
    }
    return w;
}

World tick(World w, const std::vector<Command>& commands) {
    for (const Command& cmd : commands) {
        if (cmd.kind == Command::Kind::JointTarget) {
            const GripperState grip = w.arm_pose.gripper;
            w.arm_pose = cmd.target;
            w.arm_pose.gripper = grip;  // gripper changes only via Gripper commands
        } else {
            w = attach_detach(std::move(w), cmd.action);
        }
    }
    if (w.held_object) {
        const CartesianPoint ee = end_effector(w);
        for (WorldObject& obj : w.objects) {
            if (obj.id == *w.held_object) obj.position = ee;
        }
    }
    w.tick_count += 1;
    return w;
}

SensorSnapshot sensor_snapshot(const World& w) {
    SensorSnapshot snap;
    for (const WorldObject& obj : w.objects) {
        try {
            snap.detections.push_back(project_object(obj, w.camera));
            snap.hints[obj.id] = {obj.width, obj.position.z};
        } catch (const OutOfView&) {
            // not visible this tick
        }
    }
    const CartesianPoint ee = end_effector(w);
    const auto idx = nearest_object(w, ee);
    snap.ultrasonic = idx ? simulate_echo(ee, w.objects[*idx].position)
                          : UltrasonicReading{0.0, 343.0};
    snap.pressure = {w.pressure_baseline,
                     w.pressure_baseline + (w.held_object ? w.grip_delta : 0.0)};
    return snap;
}

}  // namespace arm
