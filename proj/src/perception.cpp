#include "arm/perception.hpp"

#include <cmath>

namespace arm {

double estimate_distance(double real_size, double focal, double apparent) {
    if (real_size <= 0 || focal <= 0 || apparent <= 0) {
        throw NonPositiveInput("estimate_distance requires positive inputs");
    }
    return real_size * focal / apparent;
}

double horizontal_half_fov(const PinholeCamera& cam) {
    return std::atan2(cam.image_w / 2.0, cam.focal_px);
}

DetectedObject project_object(const WorldObject& obj, const PinholeCamera& cam) {
    const double dx = obj.position.x - cam.mount.x;
    const double dy = obj.position.y - cam.mount.y;
    const double forward = dx * cam.axis_x + dy * cam.axis_y;
    if (forward <= 0) {
        throw OutOfView("object " + std::to_string(obj.id) + " is behind the camera");
    }
    const double lateral = cam.axis_x * dy - cam.axis_y * dx;
    const double bearing = -std::atan2(lateral, forward);
    if (std::fabs(bearing) > horizontal_half_fov(cam)) {
        throw OutOfView("object " + std::to_string(obj.id) + " outside field of view");
    }
    const double range = std::hypot(dx, dy);
    DetectedObject d;
    d.class_label = obj.class_label;
    d.similarity = obj.similarity;
    d.apparent_size = obj.width * cam.focal_px / range;
    d.bearing = bearing;
    d.source_id = obj.id;
    return d;
}

bool detection_gate(const DetectedObject& d, const std::string& target_class,
                    double threshold) {
    return d.class_label == target_class && d.similarity >= threshold;
}

CartesianPoint camera_to_base(const DetectedObject& d, double range,
                              const PinholeCamera& cam, double z_plane) {
    if (range <= 0) {
        throw NonPositiveInput("camera_to_base requires a positive range");
    }
    // Optical axis rotated by -bearing (positive bearing is to the right).
    const double c = std::cos(d.bearing);
    const double s = std::sin(d.bearing);
    const double dir_x = cam.axis_x * c + cam.axis_y * s;
    const double dir_y = -cam.axis_x * s + cam.axis_y * c;
    return {cam.mount.x + range * dir_x, cam.mount.y + range * dir_y, z_plane};
}

}  // namespace arm
