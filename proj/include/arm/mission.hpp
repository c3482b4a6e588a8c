#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arm/actuation.hpp"
#include "arm/world.hpp"

namespace arm {

enum class MissionState {
    Idle,
    Detecting,
    Ranging,
    Planning,
    Reaching,
    Gripping,
    Verifying,
    Transporting,
    Releasing,
    Homing,
    Done,
    Failed,
};

enum class FailReason { None, Unreachable, GripFailed, Timeout };

std::string mission_state_name(MissionState s);
std::string fail_reason_name(FailReason r);

struct PickTask {
    std::string target_class;
    double similarity_threshold;
    CartesianPoint home_position;
    double grip_threshold;
    int max_grip_retries = 1;
    double reach_tolerance = 1.0;  // cm
    long tick_budget = 10000;
};

struct TraceEvent {
    long t_ms;
    MissionState state;
    FailReason reason = FailReason::None;
    std::vector<std::pair<std::string, std::string>> detail;
};

// Line format: t_ms=<int> state=<NAME> <key>=<value>... (keys in fixed order).
std::string format_trace_event(const TraceEvent& e);

// Line format: t_ms=<int> ch=<int> duty=<4dp> pulse_ms=<4dp>
std::string format_pwm_command(const PwmCommand& c);

struct StepResult {
    MissionState state;
    FailReason reason = FailReason::None;
    std::vector<Command> commands;
    std::vector<std::pair<std::string, std::string>> detail;
};

// The flow state machine: detect -> range -> plan -> reach -> grip -> verify
// -> transport -> release -> home. Failures are states, not errors. The
// controller keeps the selected detection, planned target and grip attempt
// count between steps; the transition itself is deterministic.
class MissionController {
public:
    MissionController(ArmGeometry geom, PinholeCamera camera, PickTask task)
        : geom_(geom), camera_(std::move(camera)), task_(std::move(task)) {}

    StepResult step(MissionState state, const SensorSnapshot& inputs);

    std::optional<int> picked_object_id() const { return picked_id_; }

private:
    ArmGeometry geom_;
    PinholeCamera camera_;
    PickTask task_;

    std::optional<DetectedObject> selected_;
    std::optional<ObjectHint> selected_hint_;
    std::optional<CartesianPoint> target_;
    std::optional<int> picked_id_;
    int grip_attempts_ = 0;
};

struct MissionConfig {
    std::array<ServoSpec, 5> servos = default_servos();
    ControlCalibration calibration;
    DutyMapping duty_mapping = DutyMapping::Paper;
    bool clamp_angles = true;
};

struct MissionReport {
    MissionState final_state;
    FailReason reason = FailReason::None;
    std::vector<TraceEvent> trace;
    std::vector<PwmCommand> pwm_log;
    long ticks_used = 0;
    std::optional<int> picked_object_id;
    std::optional<CartesianPoint> final_object_position;
};

// Drives the state machine against the world until Done, Failed, or the tick
// budget runs out (Failed/Timeout). Deterministic: identical inputs produce
// identical traces and PWM logs.
MissionReport run_mission(World world, const PickTask& task,
                          const MissionConfig& config);

}  // namespace arm
