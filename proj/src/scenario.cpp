#include "arm/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace arm {
namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

double parse_number(const std::string& key, const std::string& value) {
    std::size_t pos = 0;
    double v;
    try {
        v = std::stod(value, &pos);
    } catch (const std::exception&) {
        throw ValidationError(key, "not a number: '" + value + "'");
    }
    if (pos != value.size() || !std::isfinite(v)) {
        throw ValidationError(key, "not a number: '" + value + "'");
    }
    return v;
}

long parse_integer(const std::string& key, const std::string& value) {
    const double v = parse_number(key, value);
    if (v != std::floor(v)) throw ValidationError(key, "expected an integer");
    return static_cast<long>(v);
}

// Key-value pairs of one section, with duplicate detection.
class Section {
public:
    Section(std::string name, int line) : name_(std::move(name)), line_(line) {}

    void add(const std::string& key, const std::string& value, int line) {
        if (entries_.count(key)) {
            throw ParseError(line, "duplicate key '" + key + "' in [" + name_ + "]");
        }
        entries_[key] = value;
    }

    std::string require(const std::string& key) const {
        const auto it = entries_.find(key);
        if (it == entries_.end()) {
            throw ValidationError(name_ + "." + key, "missing required key");
        }
        used_.insert(key);
        return it->second;
    }

    std::string optional(const std::string& key, const std::string& fallback) const {
        const auto it = entries_.find(key);
        used_.insert(key);
        return it == entries_.end() ? fallback : it->second;
    }

    double require_number(const std::string& key) const {
        return parse_number(name_ + "." + key, require(key));
    }

    double optional_number(const std::string& key, double fallback) const {
        const auto it = entries_.find(key);
        used_.insert(key);
        return it == entries_.end() ? fallback
                                    : parse_number(name_ + "." + key, it->second);
    }

    long optional_integer(const std::string& key, long fallback) const {
        const auto it = entries_.find(key);
        used_.insert(key);
        return it == entries_.end() ? fallback
                                    : parse_integer(name_ + "." + key, it->second);
    }

    void reject_unknown_keys() const {
        for (const auto& [key, value] : entries_) {
            if (!used_.count(key)) {
                throw ValidationError(name_ + "." + key, "unknown key");
            }
        }
    }

    const std::string& name() const { return name_; }

private:
    std::string name_;
    int line_;
    std::map<std::string, std::string> entries_;
    mutable std::set<std::string> used_;
};

// Shortest representation that round-trips.
std::string num_repr(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

}  // namespace

Scenario parse_scenario(const std::string& text) {
    std::vector<Section> sections;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']' || line.size() < 3) {
                throw ParseError(lineno, "malformed section header '" + line + "'");
            }
            sections.emplace_back(line.substr(1, line.size() - 2), lineno);
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ParseError(lineno, "expected key = value, got '" + line + "'");
        }
        if (sections.empty()) {
            throw ParseError(lineno, "key outside any section");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw ParseError(lineno, "empty key");
        sections.back().add(key, value, lineno);
    }

    const Section* arm_sec = nullptr;
    const Section* cam_sec = nullptr;
    const Section* task_sec = nullptr;
    std::vector<std::pair<int, const Section*>> object_secs;
    for (const Section& sec : sections) {
        const std::string& name = sec.name();
        if (name == "arm") {
            arm_sec = &sec;
        } else if (name == "camera") {
            cam_sec = &sec;
        } else if (name == "task") {
            task_sec = &sec;
        } else if (name.rfind("object.", 0) == 0) {
            const std::string id_text = name.substr(7);
            try {
                object_secs.emplace_back(std::stoi(id_text), &sec);
            } catch (const std::exception&) {
                throw ValidationError(name, "object id must be an integer");
            }
        } else {
            throw ValidationError(name, "unknown section");
        }
    }
    if (!arm_sec) throw ValidationError("arm", "missing section");
    if (!cam_sec) throw ValidationError("camera", "missing section");
    if (!task_sec) throw ValidationError("task", "missing section");

    Scenario s;
    s.arm.a_cm = arm_sec->require_number("a_cm");
    s.arm.b_cm = arm_sec->require_number("b_cm");
    s.arm.c_cm = arm_sec->require_number("c_cm");
    const std::string mapping = arm_sec->optional("duty_mapping", "paper");
    if (mapping == "paper") {
        s.arm.duty_mapping = DutyMapping::Paper;
    } else if (mapping == "calibrated") {
        s.arm.duty_mapping = DutyMapping::Calibrated;
    } else {
        throw ValidationError("arm.duty_mapping", "must be 'paper' or 'calibrated'");
    }
    const std::string pins = arm_sec->optional("servo_pins", "11,13,15,29,31");
    {
        std::istringstream ps(pins);
        std::string item;
        std::size_t i = 0;
        while (std::getline(ps, item, ',')) {
            if (i >= s.arm.servo_pins.size()) {
                throw ValidationError("arm.servo_pins", "expected exactly 5 pins");
            }
            const long pin = parse_integer("arm.servo_pins", trim(item));
            try {
                gpio_at_board_pin(static_cast<int>(pin));  // must be a usable GPIO pin
            } catch (const Error& e) {
                throw ValidationError("arm.servo_pins", e.what());
            }
            s.arm.servo_pins[i++] = static_cast<int>(pin);
        }
        if (i != s.arm.servo_pins.size()) {
            throw ValidationError("arm.servo_pins", "expected exactly 5 pins");
        }
    }
    if (s.arm.a_cm <= 0 || s.arm.b_cm <= 0) {
        throw ValidationError("arm.a_cm", "segment lengths must be positive");
    }
    if (s.arm.c_cm < 0) {
        throw ValidationError("arm.c_cm", "shoulder offset must be non-negative");
    }
    arm_sec->reject_unknown_keys();

    s.camera.focal_px = cam_sec->require_number("focal_px");
    s.camera.image_w = static_cast<int>(parse_integer("camera.image_w", cam_sec->require("image_w")));
    s.camera.image_h = static_cast<int>(parse_integer("camera.image_h", cam_sec->require("image_h")));
    s.camera.mount_x_cm = cam_sec->optional_number("mount_x_cm", 0.0);
    s.camera.mount_y_cm = cam_sec->optional_number("mount_y_cm", 0.0);
    s.camera.mount_z_cm = cam_sec->optional_number("mount_z_cm", 0.0);
    s.camera.axis_x = cam_sec->optional_number("axis_x", 0.0);
    s.camera.axis_y = cam_sec->optional_number("axis_y", 1.0);
    if (s.camera.focal_px <= 0) {
        throw ValidationError("camera.focal_px", "must be positive");
    }
    if (s.camera.image_w <= 0 || s.camera.image_h <= 0) {
        throw ValidationError("camera.image_w", "image dimensions must be positive");
    }
    const double axis_norm = std::hypot(s.camera.axis_x, s.camera.axis_y);
    if (std::fabs(axis_norm - 1.0) > 1e-9) {
        throw ValidationError("camera.axis_x", "optical axis must have unit norm");
    }
    cam_sec->reject_unknown_keys();

    s.task.target_class = task_sec->require("target_class");
    s.task.similarity_threshold = task_sec->require_number("similarity_threshold");
    s.task.home_x_cm = task_sec->require_number("home_x_cm");
    s.task.home_y_cm = task_sec->require_number("home_y_cm");
    s.task.home_z_cm = task_sec->require_number("home_z_cm");
    s.task.grip_threshold = task_sec->require_number("grip_threshold");
    s.task.max_grip_retries = static_cast<int>(task_sec->optional_integer("max_grip_retries", 1));
    s.task.reach_tolerance_cm = task_sec->optional_number("reach_tolerance_cm", 1.0);
    s.task.tick_budget = task_sec->optional_integer("tick_budget", 10000);
    s.task.grip_delta = task_sec->optional_number("grip_delta", 100.0);
    if (s.task.similarity_threshold < 0 || s.task.similarity_threshold > 1) {
        throw ValidationError("task.similarity_threshold", "must be in [0, 1]");
    }
    if (s.task.grip_threshold <= 0) {
        throw ValidationError("task.grip_threshold", "must be positive");
    }
    if (s.task.max_grip_retries < 0) {
        throw ValidationError("task.max_grip_retries", "must be non-negative");
    }
    if (s.task.reach_tolerance_cm <= 0) {
        throw ValidationError("task.reach_tolerance_cm", "must be positive");
    }
    if (s.task.tick_budget <= 0) {
        throw ValidationError("task.tick_budget", "must be positive");
    }
    const CartesianPoint home{s.task.home_x_cm, s.task.home_y_cm, s.task.home_z_cm};
    if (!workspace_contains(home, {s.arm.a_cm, s.arm.b_cm, s.arm.c_cm})) {
        throw ValidationError("task.home_x_cm", "home position is unreachable");
    }
    task_sec->reject_unknown_keys();

    std::set<int> seen_ids;
    for (const auto& [id, sec] : object_secs) {
        if (!seen_ids.insert(id).second) {
            throw ValidationError(sec->name(), "duplicate object id");
        }
        Scenario::Object obj;
        obj.id = id;
        obj.class_label = sec->require("class");
        obj.x_cm = sec->require_number("x_cm");
        obj.y_cm = sec->require_number("y_cm");
        obj.z_cm = sec->require_number("z_cm");
        obj.width_cm = sec->require_number("width_cm");
        obj.height_cm = sec->require_number("height_cm");
        obj.similarity = sec->require_number("similarity");
        if (obj.width_cm <= 0 || obj.height_cm <= 0) {
            throw ValidationError(sec->name() + ".width_cm", "object size must be positive");
        }
        if (obj.similarity < 0 || obj.similarity > 1) {
            throw ValidationError(sec->name() + ".similarity", "must be in [0, 1]");
        }
        sec->reject_unknown_keys();
        s.objects.push_back(obj);
    }
    std::sort(s.objects.begin(), s.objects.end(),
              [](const auto& lhs, const auto& rhs) { return lhs.id < rhs.id; });
    return s;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open scenario file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

std::string format_scenario(const Scenario& s) {
    std::ostringstream out;
    out << "[arm]\n";
    out << "a_cm = " << num_repr(s.arm.a_cm) << "\n";
    out << "b_cm = " << num_repr(s.arm.b_cm) << "\n";
    out << "c_cm = " << num_repr(s.arm.c_cm) << "\n";
    out << "duty_mapping = "
        << (s.arm.duty_mapping == DutyMapping::Paper ? "paper" : "calibrated") << "\n";
    out << "servo_pins = ";
    for (std::size_t i = 0; i < s.arm.servo_pins.size(); ++i) {
        out << (i ? "," : "") << s.arm.servo_pins[i];
    }
    out << "\n[camera]\n";
    out << "focal_px = " << num_repr(s.camera.focal_px) << "\n";
    out << "image_w = " << s.camera.image_w << "\n";
    out << "image_h = " << s.camera.image_h << "\n";
    out << "mount_x_cm = " << num_repr(s.camera.mount_x_cm) << "\n";
    out << "mount_y_cm = " << num_repr(s.camera.mount_y_cm) << "\n";
    out << "mount_z_cm = " << num_repr(s.camera.mount_z_cm) << "\n";
    out << "axis_x = " << num_repr(s.camera.axis_x) << "\n";
    out << "axis_y = " << num_repr(s.camera.axis_y) << "\n";
    out << "[task]\n";
    out << "target_class = " << s.task.target_class << "\n";
    out << "similarity_threshold = " << num_repr(s.task.similarity_threshold) << "\n";
    out << "home_x_cm = " << num_repr(s.task.home_x_cm) << "\n";
    out << "home_y_cm = " << num_repr(s.task.home_y_cm) << "\n";
    out << "home_z_cm = " << num_repr(s.task.home_z_cm) << "\n";
    out << "grip_threshold = " << num_repr(s.task.grip_threshold) << "\n";
    out << "max_grip_retries = " << s.task.max_grip_retries << "\n";
    out << "reach_tolerance_cm = " << num_repr(s.task.reach_tolerance_cm) << "\n";
    out << "tick_budget = " << s.task.tick_budget << "\n";
    out << "grip_delta = " << num_repr(s.task.grip_delta) << "\n";
    for (const Scenario::Object& obj : s.objects) {
        out << "[object." << obj.id << "]\n";
        out << "class = " << obj.class_label << "\n";
        out << "x_cm = " << num_repr(obj.x_cm) << "\n";
        out << "y_cm = " << num_repr(obj.y_cm) << "\n";
        out << "z_cm = " << num_repr(obj.z_cm) << "\n";
        out << "width_cm = " << num_repr(obj.width_cm) << "\n";
        out << "height_cm = " << num_repr(obj.height_cm) << "\n";
        out << "similarity = " << num_repr(obj.similarity) << "\n";
    }
    return out.str();
}

World build_world(const Scenario& s) {
    World w;
    w.geom = {s.arm.a_cm, s.arm.b_cm, s.arm.c_cm};
    w.camera.focal_px = s.camera.focal_px;
    w.camera.image_w = s.camera.image_w;
    w.camera.image_h = s.camera.image_h;
    w.camera.mount = {s.camera.mount_x_cm, s.camera.mount_y_cm, s.camera.mount_z_cm};
    w.camera.axis_x = s.camera.axis_x;
    w.camera.axis_y = s.camera.axis_y;
    w.grip_delta = s.task.grip_delta;
    w.reach_tolerance = s.task.reach_tolerance_cm;
    for (const Scenario::Object& obj : s.objects) {
        w.objects.push_back({obj.id, obj.class_label,
                             {obj.x_cm, obj.y_cm, obj.z_cm},
                             obj.width_cm, obj.height_cm, obj.similarity});
    }
    return w;
}

PickTask build_task(const Scenario& s) {
    PickTask t;
    t.target_class = s.task.target_class;
    t.similarity_threshold = s.task.similarity_threshold;
    t.home_position = {s.task.home_x_cm, s.task.home_y_cm, s.task.home_z_cm};
    t.grip_threshold = s.task.grip_threshold;
    t.max_grip_retries = s.task.max_grip_retries;
    t.reach_tolerance = s.task.reach_tolerance_cm;
    t.tick_budget = s.task.tick_budget;
    return t;
}

MissionConfig build_config(const Scenario& s) {
    MissionConfig cfg;
    cfg.duty_mapping = s.arm.duty_mapping;
    for (std::size_t i = 0; i < cfg.servos.size(); ++i) {
        cfg.servos[i].board_pin = s.arm.servo_pins[i];
    }
    return cfg;
}

}  // namespace arm
