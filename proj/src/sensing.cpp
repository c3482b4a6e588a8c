#include "arm/sensing.hpp"

#include <cmath>

namespace arm {

double ultrasonic_distance(const UltrasonicReading& r) {
    if (r.echo_round_trip < 0 || r.speed_of_sound <= 0) {
        throw NonPositiveInput("invalid ultrasonic reading");
    }
    // m/s * s / 2 -> m, * 100 -> cm
    return r.speed_of_sound * r.echo_round_trip / 2.0 * 100.0;
}

UltrasonicReading simulate_echo(const CartesianPoint& sensor_pos,
                                const CartesianPoint& target_pos,
                                double speed_of_sound) {
    if (speed_of_sound <= 0) {
        throw NonPositiveInput("speed of sound must be positive");
    }
    const double dist_m = std::sqrt((target_pos.x - sensor_pos.x) * (target_pos.x - sensor_pos.x) +
                                    (target_pos.y - sensor_pos.y) * (target_pos.y - sensor_pos.y) +
                                    (target_pos.z - sensor_pos.z) * (target_pos.z - sensor_pos.z)) /
                          100.0;
    return {2.0 * dist_m / speed_of_sound, speed_of_sound};
}

bool grip_confirmed(const PressureReading& p, double threshold) {
    return p.current - p.baseline >= threshold;
}

}  // namespace arm
