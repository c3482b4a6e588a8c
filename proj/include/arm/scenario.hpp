#pragma once

#include <array>
#include <string>
#include <vector>

#include "arm/mission.hpp"

namespace arm {

// Scenario files are sectioned key=value text, UTF-8, `#` comments.
// Sections: [arm], [camera], [task] and one [object.<id>] per object.
struct Scenario {
    struct Arm {
        double a_cm = 14.9;
        double b_cm = 14.6;
        double c_cm = 5.4;
        std::array<int, 5> servo_pins{11, 13, 15, 29, 31};
        DutyMapping duty_mapping = DutyMapping::Paper;
        bool operator==(const Arm&) const = default;
    };
    struct Camera {
        double focal_px = 0.0;
        int image_w = 0;
        int image_h = 0;
        double mount_x_cm = 0.0;
        double mount_y_cm = 0.0;
        double mount_z_cm = 0.0;
        double axis_x = 0.0;
        double axis_y = 1.0;
        bool operator==(const Camera&) const = default;
    };
    struct Task {
        std::string target_class;
        double similarity_threshold = 0.0;
        double home_x_cm = 0.0;
        double home_y_cm = 0.0;
        double home_z_cm = 0.0;
        double grip_threshold = 0.0;
        int max_grip_retries = 1;
        double reach_tolerance_cm = 1.0;
        long tick_budget = 10000;
        double grip_delta = 100.0;
        bool operator==(const Task&) const = default;
    };
    struct Object {
        int id = 0;
        std::string class_label;
        double x_cm = 0.0;
        double y_cm = 0.0;
        double z_cm = 0.0;
        double width_cm = 0.0;
        double height_cm = 0.0;
        double similarity = 0.0;
        bool operator==(const Object&) const = default;
    };

    Arm arm;
    Camera camera;
    Task task;
    std::vector<Object> objects;  // sorted by id

    bool operator==(const Scenario&) const = default;
};

// Throws ParseError on malformed lines, ValidationError on missing/invalid
// keys. Defaults are applied for optional keys.
Scenario parse_scenario(const std::string& text);

Scenario load_scenario(const std::string& path);

// Canonical emission; parse(format_scenario(s)) == s.
std::string format_scenario(const Scenario& s);

World build_world(const Scenario& s);
PickTask build_task(const Scenario& s);
MissionConfig build_config(const Scenario& s);

}  // namespace arm
