#pragma once

#include <string>

#include "arm/errors.hpp"
#include "arm/kinematics.hpp"

namespace arm {

// Level-mounted pinhole camera. The optical axis is horizontal; (axis_x,
// axis_y) must have unit norm. Ranges are measured in the horizontal plane.
struct PinholeCamera {
    double focal_px;
    int image_w;
    int image_h;
    CartesianPoint mount{0.0, 0.0, 0.0};
    double axis_x = 0.0;
    double axis_y = 1.0;
};

struct WorldObject {
    int id;
    std::string class_label;
    CartesianPoint position;
    double width;   // cm
    double height;  // cm
    double similarity;  // [0, 1], what the simulated detector reports
};

// Bearing is the horizontal angle off the optical axis, positive toward the
// camera's right-hand side.
struct DetectedObject {
    std::string class_label;
    double similarity;
    double apparent_size;  // px
    double bearing;        // rad
    int source_id;
};

// apparent-size ranging: real_size * focal / apparent.
double estimate_distance(double real_size, double focal, double apparent);

double horizontal_half_fov(const PinholeCamera& cam);

// Throws OutOfView for objects behind the camera or outside the horizontal
// field of view.
DetectedObject project_object(const WorldObject& obj, const PinholeCamera& cam);

bool detection_gate(const DetectedObject& d, const std::string& target_class,
                    double threshold);

// Recovers x/y from range and bearing; z is the caller-supplied table plane.
CartesianPoint camera_to_base(const DetectedObject& d, double range,
                              const PinholeCamera& cam, double z_plane = 0.0);

}  // namespace arm
