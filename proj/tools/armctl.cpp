#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "arm/scenario.hpp"

namespace fs = std::filesystem;

namespace {

std::string fixed9(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9f", v);
    return buf;
}

std::string number(double v) {
    std::ostringstream out;
    out << v;
    return out.str();
}

std::string trace_text(const arm::MissionReport& report) {
    std::string out;
    for (const arm::TraceEvent& e : report.trace) {
        out += arm::format_trace_event(e) + "\n";
    }
    return out;
}

std::string pwm_text(const arm::MissionReport& report) {
    std::string out;
    for (const arm::PwmCommand& c : report.pwm_log) {
        out += arm::format_pwm_command(c) + "\n";
    }
    return out;
}

std::string summary_text(const arm::MissionReport& report) {
    std::string out = "final_state=" + arm::mission_state_name(report.final_state);
    if (report.final_state == arm::MissionState::Failed) {
        out += " reason=" + arm::fail_reason_name(report.reason);
    }
    out += "\nticks=" + std::to_string(report.ticks_used);
    if (report.final_object_position) {
        char buf[128];
        std::snprintf(buf, sizeof(buf),
                      "\nobject_x_cm=%.6f object_y_cm=%.6f object_z_cm=%.6f",
                      report.final_object_position->x,
                      report.final_object_position->y,
                      report.final_object_position->z);
        out += buf;
    }
    out += "\npwm_commands=" + std::to_string(report.pwm_log.size()) + "\n";
    return out;
}

std::string emit_report(const arm::MissionReport& report) {
    return trace_text(report) + summary_text(report);
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw arm::IoError("cannot write " + path);
    out << content;
}

arm::MissionReport run_one(const std::string& path) {
    const arm::Scenario scenario = arm::load_scenario(path);
    return arm::run_mission(arm::build_world(scenario), arm::build_task(scenario),
                            arm::build_config(scenario));
}

int cmd_run(const std::string& path, const std::string& trace_file,
            const std::string& pwm_file) {
    if (fs::is_directory(path)) {
        // One mission per worker; results printed in filename order.
        std::vector<fs::path> files;
        for (const auto& entry : fs::directory_iterator(path)) {
            if (entry.path().extension() == ".scn") files.push_back(entry.path());
        }
        std::sort(files.begin(), files.end());
        std::vector<std::future<arm::MissionReport>> futures;
        futures.reserve(files.size());
        for (const fs::path& f : files) {
            futures.push_back(std::async(std::launch::async,
                                         [f] { return run_one(f.string()); }));
        }
        bool all_done = true;
        for (std::size_t i = 0; i < files.size(); ++i) {
            const arm::MissionReport report = futures[i].get();
            std::cout << "=== " << files[i].filename().string() << "\n"
                      << emit_report(report);
            all_done = all_done && report.final_state == arm::MissionState::Done;
        }
        return all_done ? 0 : 2;
    }
    const arm::MissionReport report = run_one(path);
    if (!trace_file.empty()) write_file(trace_file, trace_text(report));
    if (!pwm_file.empty()) write_file(pwm_file, pwm_text(report));
    std::cout << emit_report(report);
    return report.final_state == arm::MissionState::Done ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pick-and-place arm control and simulation"};
    app.require_subcommand(1);

    std::string scenario_path, trace_file, pwm_file;
    auto* run = app.add_subcommand("run", "run a mission from a scenario file or directory");
    run->add_option("scenario", scenario_path, "scenario file (.scn) or directory")->required();
    run->add_option("--trace", trace_file, "write the trace to this file");
    run->add_option("--pwm-log", pwm_file, "write the PWM log to this file");

    double x = 0, y = 0, z = 0;
    double ga = arm::kDefaultGeometry.a, gb = arm::kDefaultGeometry.b,
           gc = arm::kDefaultGeometry.c;
    auto* ik = app.add_subcommand("ik", "inverse kinematics for a target point");
    ik->add_option("--x", x)->required();
    ik->add_option("--y", y)->required();
    ik->add_option("--z", z)->required();
    ik->add_option("--a", ga, "segment 1 length, cm");
    ik->add_option("--b", gb, "segment 2 length, cm");
    ik->add_option("--c", gc, "shoulder offset, cm");

    double t0 = 0, t1 = 0, t2 = 0;
    auto* fk = app.add_subcommand("fk", "forward kinematics for joint angles (rad)");
    fk->add_option("--t0", t0)->required();
    fk->add_option("--t1", t1)->required();
    fk->add_option("--t2", t2)->required();
    fk->add_option("--a", ga);
    fk->add_option("--b", gb);
    fk->add_option("--c", gc);

    double width = 0, focal = 0, apparent = 0;
    auto* distance = app.add_subcommand("distance", "range from apparent size");
    distance->add_option("--width", width, "real object width, cm")->required();
    distance->add_option("--focal", focal, "focal length, px")->required();
    distance->add_option("--apparent", apparent, "apparent size, px")->required();

    double angle = 0;
    std::string mapping = "paper";
    auto* duty = app.add_subcommand("duty", "servo duty cycle for an angle");
    duty->add_option("--angle", angle, "degrees in [0, 180]")->required();
    duty->add_option("--mapping", mapping, "paper|calibrated")
        ->check(CLI::IsMember({"paper", "calibrated"}));

    int board_pin = 0, bcm_gpio = 0;
    auto* pins = app.add_subcommand("pins", "GPIO header pin lookup");
    auto* board_opt = pins->add_option("--board", board_pin, "physical pin 1-40");
    auto* bcm_opt = pins->add_option("--bcm", bcm_gpio, "GPIO number");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << e.what() << "\n";
        return 1;
    }

    try {
        if (run->parsed()) {
            return cmd_run(scenario_path, trace_file, pwm_file);
        }
        if (ik->parsed()) {
            const arm::ArmGeometry geom{ga, gb, gc};
            try {
                const arm::JointAngles j = arm::inverse_kinematics({x, y, z}, geom);
                std::cout << "theta0=" << fixed9(j.theta0)
                          << " theta1=" << fixed9(j.theta1)
                          << " theta2=" << fixed9(j.theta2)
                          << " theta3=" << fixed9(j.theta3) << "\n";
            } catch (const arm::Unreachable&) {
                std::cout << "Unreachable\n";
            } catch (const arm::DegenerateAtShoulder&) {
                std::cout << "Unreachable\n";
            }
            return 0;
        }
        if (fk->parsed()) {
            const arm::CartesianPoint p =
                arm::forward_kinematics({t0, t1, t2, t1 + t2 - M_PI}, {ga, gb, gc});
            std::cout << "x=" << fixed9(p.x) << " y=" << fixed9(p.y)
                      << " z=" << fixed9(p.z) << "\n";
            return 0;
        }
        if (distance->parsed()) {
            std::cout << number(arm::estimate_distance(width, focal, apparent)) << "\n";
            return 0;
        }
        if (duty->parsed()) {
            const auto m = mapping == "paper" ? arm::DutyMapping::Paper
                                              : arm::DutyMapping::Calibrated;
            std::cout << number(arm::angle_to_duty(angle, m)) << "\n";
            return 0;
        }
        if (pins->parsed()) {
            if (board_opt->count()) {
                std::cout << arm::pin_function_label(arm::pin_function(board_pin)) << "\n";
            } else if (bcm_opt->count()) {
                std::cout << arm::board_pin_of_gpio(bcm_gpio) << "\n";
            } else {
                std::cerr << "pins: expected --board or --bcm\n";
                return 1;
            }
            return 0;
        }
    } catch (const arm::Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 1;
}
