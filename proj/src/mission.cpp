#include "arm/mission.hpp"

#include <cmath>
#include <cstdio>

namespace arm {
namespace {

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

std::string fixed4(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

}  // namespace

std::string mission_state_name(MissionState s) {
    switch (s) {
        case MissionState::Idle: return "Idle";
        case MissionState::Detecting: return "Detecting";
        case MissionState::Ranging: return "Ranging";
        case MissionState::Planning: return "Planning";
        case MissionState::Reaching: return "Reaching";
        case MissionState::Gripping: return "Gripping";
        case MissionState::Verifying: return "Verifying";
        case MissionState::Transporting: return "Transporting";
        case MissionState::Releasing: return "Releasing";
        case MissionState::Homing: return "Homing";
        case MissionState::Done: return "Done";
        case MissionState::Failed: return "Failed";
    }
    return "?";
}

std::string fail_reason_name(FailReason r) {
    switch (r) {
        case FailReason::None: return "None";
        case FailReason::Unreachable: return "Unreachable";
        case FailReason::GripFailed: return "GripFailed";
        case FailReason::Timeout: return "Timeout";
    }
    return "?";
}

std::string format_trace_event(const TraceEvent& e) {
    std::string line = "t_ms=" + std::to_string(e.t_ms) +
                       " state=" + mission_state_name(e.state);
    if (e.state == MissionState::Failed) {
        line += " reason=" + fail_reason_name(e.reason);
    }
    for (const auto& [k, v] : e.detail) {
        line += " " + k + "=" + v;
    }
    return line;
}

std::string format_pwm_command(const PwmCommand& c) {
    return "t_ms=" + std::to_string(c.t_ms) + " ch=" + std::to_string(c.channel) +
           " duty=" + fixed4(c.duty) + " pulse_ms=" + fixed4(c.pulse_ms);
}

StepResult MissionController::step(MissionState state, const SensorSnapshot& in) {
    StepResult res;
    res.state = state;
    switch (state) {
        case MissionState::Idle:
            res.state = MissionState::Detecting;
            break;

        case MissionState::Detecting: {
            // Best accepted detection: highest similarity, ties by lowest id.
            const DetectedObject* best = nullptr;
            for (const DetectedObject& d : in.detections) {
                if (!detection_gate(d, task_.target_class, task_.similarity_threshold))
                    continue;
                if (!best || d.similarity > best->similarity ||
                    (d.similarity == best->similarity && d.source_id < best->source_id)) {
                    best = &d;
                }
            }
            res.detail.emplace_back("detections", std::to_string(in.detections.size()));
            res.detail.emplace_back("accepted", best ? "1" : "0");
            if (best) {
                selected_ = *best;
                const auto it = in.hints.find(best->source_id);
                selected_hint_ = it != in.hints.end()
                                     ? it->second
                                     : ObjectHint{1.0, 0.0};
                res.detail.emplace_back("similarity", fixed6(best->similarity));
                res.state = MissionState::Ranging;
            }
            break;
        }

        case MissionState::Ranging: {
            const double range = estimate_distance(selected_hint_->width,
                                                   camera_.focal_px,
                                                   selected_->apparent_size);
            target_ = camera_to_base(*selected_, range, camera_, selected_hint_->z);
            res.detail.emplace_back("range_cm", fixed6(range));
            res.state = MissionState::Planning;
            break;
        }

        case MissionState::Planning: {
            res.detail.emplace_back("x_cm", fixed6(target_->x));
            res.detail.emplace_back("y_cm", fixed6(target_->y));
            res.detail.emplace_back("z_cm", fixed6(target_->z));
            try {
                const JointAngles j = inverse_kinematics(*target_, geom_);
                const ControlValues cv = joint_to_control(j, ControlCalibration{});
                res.detail.emplace_back("v0", fixed6(cv.v0));
                res.detail.emplace_back("v1", fixed6(cv.v1));
                res.detail.emplace_back("v2", fixed6(cv.v2));
                res.detail.emplace_back("v3", fixed6(cv.v3));
                res.commands.push_back(Command::joint_target(j));
                res.state = MissionState::Reaching;
            } catch (const Error&) {
                res.state = MissionState::Failed;
                res.reason = FailReason::Unreachable;
            }
            break;
        }

        case MissionState::Reaching: {
            const double dist = ultrasonic_distance(in.ultrasonic);
            res.detail.emplace_back("dist_cm", fixed6(dist));
            if (dist < task_.reach_tolerance) {
                res.state = MissionState::Gripping;
            }
            break;
        }

        case MissionState::Gripping:
            grip_attempts_ += 1;
            res.detail.emplace_back("attempt", std::to_string(grip_attempts_));
            res.commands.push_back(Command::gripper(GripperAction::Close));
            res.state = MissionState::Verifying;
            break;

        case MissionState::Verifying: {
            const bool ok = grip_confirmed(in.pressure, task_.grip_threshold);
            res.detail.emplace_back("pressure_delta",
                                    fixed6(in.pressure.current - in.pressure.baseline));
            res.detail.emplace_back("confirmed", ok ? "1" : "0");
            if (ok) {
                picked_id_ = selected_->source_id;
                res.state = MissionState::Transporting;
            } else if (grip_attempts_ <= task_.max_grip_retries) {
                res.state = MissionState::Gripping;
            } else {
                res.state = MissionState::Failed;
                res.reason = FailReason::GripFailed;
            }
            break;
        }

        case MissionState::Transporting: {
            try {
                JointAngles j = inverse_kinematics(task_.home_position, geom_);
                j.gripper = GripperState::Closed;
                res.commands.push_back(Command::joint_target(j));
                res.state = MissionState::Releasing;
            } catch (const Error&) {
                res.state = MissionState::Failed;
                res.reason = FailReason::Unreachable;
            }
            break;
        }

        case MissionState::Releasing:
            res.commands.push_back(Command::gripper(GripperAction::Open));
            res.state = MissionState::Homing;
            break;

        case MissionState::Homing:
            res.state = MissionState::Done;
            break;

        case MissionState::Done:
        case MissionState::Failed:
            break;
    }
    return res;
}

MissionReport run_mission(World world, const PickTask& task,
                          const MissionConfig& config) {
    if (!workspace_contains(task.home_position, world.geom)) {
        throw ScenarioInvalid("home position is outside the arm workspace");
    }
    world.reach_tolerance = task.reach_tolerance;

    MissionController controller(world.geom, world.camera, task);
    SimulatedPwmBackend backend;
    MissionReport report;
    MissionState state = MissionState::Detecting;

    long t_ms = 0;
    for (long i = 0; i < task.tick_budget; ++i) {
        const SensorSnapshot snap = sensor_snapshot(world);
        StepResult res = controller.step(state, snap);
        t_ms = world.tick_count * kTickMs;
        // Each trace line records the state the machine acted in; the terminal
        // state gets its own line below.
        report.trace.push_back({t_ms, state, FailReason::None, std::move(res.detail)});
        state = res.state;

        // Actuate: every command becomes a full 5-channel PWM frame.
        JointAngles pose = world.arm_pose;
        for (const Command& cmd : res.commands) {
            if (cmd.kind == Command::Kind::JointTarget) {
                const GripperState grip = pose.gripper;
                pose = cmd.target;
                pose.gripper = grip;
            } else {
                pose.gripper = cmd.action == GripperAction::Close
                                   ? GripperState::Closed
                                   : GripperState::Open;
            }
            emit_pwm(pose, config.servos, config.calibration, config.duty_mapping,
                     t_ms, backend, config.clamp_angles);
        }

        world = tick(std::move(world), res.commands);
        if (state == MissionState::Done || state == MissionState::Failed) {
            report.final_state = state;
            report.reason = res.reason;
            break;
        }
    }
    if (state == MissionState::Done || state == MissionState::Failed) {
        report.trace.push_back({world.tick_count * kTickMs, state, report.reason, {}});
    } else {
        // Budget exhausted without reaching a terminal state.
        report.final_state = MissionState::Failed;
        report.reason = FailReason::Timeout;
    }
    report.ticks_used = world.tick_count;
    report.pwm_log = backend.snapshot();
    report.picked_object_id = controller.picked_object_id();
    if (controller.picked_object_id()) {
        for (const WorldObject& obj : world.objects) {
            if (obj.id == *controller.picked_object_id()) {
                report.final_object_position = obj.position;
            }
        }
    }
    return report;
}

}  // namespace arm
