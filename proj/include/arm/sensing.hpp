#pragma once

#include "arm/errors.hpp"
#include "arm/kinematics.hpp"

namespace arm {

struct UltrasonicReading {
    double echo_round_trip;        // seconds between trigger and echo
    double speed_of_sound = 343.0; // m/s
};

struct PressureReading {
    double baseline;
    double current;
};

// d = v*t/2, returned in cm.
double ultrasonic_distance(const UltrasonicReading& r);

// Inverse of ultrasonic_distance for the simulator.
UltrasonicReading simulate_echo(const CartesianPoint& sensor_pos,
                                const CartesianPoint& target_pos,
                                double speed_of_sound = 343.0);

// Inclusive threshold: a delta exactly at the threshold confirms the grip.
bool grip_confirmed(const PressureReading& p, double threshold);

}  // namespace arm
