#pragma once

#include <map>
#include <optional>
#include <vector>

#include "arm/kinematics.hpp"
#include "arm/perception.hpp"
#include "arm/sensing.hpp"

namespace arm {

enum class GripperAction { Open, Close };

// One controller output: either a joint target (applied instantaneously) or a
// gripper action.
struct Command {
    enum class Kind { JointTarget, Gripper };
    Kind kind;
    JointAngles target{};       // Kind::JointTarget
    GripperAction action{};     // Kind::Gripper

    static Command joint_target(const JointAngles& j) {
        return {Kind::JointTarget, j, GripperAction::Open};
    }
    static Command gripper(GripperAction a) {
        return {Kind::Gripper, {}, a};
    }
};

// What the controller is allowed to know about a detection beyond the camera
// output: the object's nominal real width and the table height it sits at.
struct ObjectHint {
    double width;  // cm
    double z;      // cm
};

struct SensorSnapshot {
    std::vector<DetectedObject> detections;  // ordered by object id
    UltrasonicReading ultrasonic;
    PressureReading pressure;
    std::map<int, ObjectHint> hints;
};

// Kinematic world: no dynamics, joint targets are applied instantaneously and
// a held object rides the end effector. One tick is 10 ms of simulated time.
struct World {
    std::vector<WorldObject> objects;
    JointAngles arm_pose{0.0, 1.5707963267948966, 3.14159265358979323846, 1.5707963267948966};
    ArmGeometry geom = kDefaultGeometry;
    PinholeCamera camera;
    std::optional<int> held_object;
    long tick_count = 0;
    double grip_delta = 100.0;          // pressure delta while holding
    double reach_tolerance = 1.0;       // cm, gripper-to-object attach radius
    double pressure_baseline = 101325.0;
};

inline constexpr long kTickMs = 10;

CartesianPoint end_effector(const World& w);

// Close attaches the nearest object within reach_tolerance of the end
// effector; Open detaches at the current position.
World attach_detach(World w, GripperAction action);

World tick(World w, const std::vector<Command>& commands);

SensorSnapshot sensor_snapshot(const World& w);

}  // namespace arm
