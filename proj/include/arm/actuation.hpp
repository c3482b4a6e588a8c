#pragma once

#include <array>
#include <string>
#include <vector>

#include "arm/errors.hpp"
#include "arm/kinematics.hpp"

namespace arm {

// "paper": duty = angle/180 + 2 (duties in [2, 3]).
// "calibrated": duty = angle/18 + 2 (the conventional 1-2 ms band at 50 Hz).
enum class DutyMapping { Paper, Calibrated };

struct ServoSpec {
    std::string model;  // MG996, MG995 or MG90S
    int channel;        // logical joint index 0-4
    int board_pin;      // physical header pin carrying the signal wire
    double angle_min = 0.0;    // degrees
    double angle_max = 180.0;  // degrees
    double pwm_freq = 50.0;    // Hz
};

struct PwmCommand {
    int channel;
    double duty;      // percent of the PWM period
    double pulse_ms;  // duty/100 * (1000/pwm_freq)
    long t_ms;        // ms since mission start
};

// Joint-to-control linear maps; values are logged but do not drive the servos.
struct ControlCalibration {
    double offset0 = 0.02;
    double offset1 = -2.4;
    double offset2 = -10.0;
    double slope = 3.3;
    double divisor3 = 0.3;
};

struct ControlValues {
    double v0;
    double v1;
    double v2;
    double v3;
};

double angle_to_duty(double angle_deg, DutyMapping mapping = DutyMapping::Paper);

double duty_to_pulse_ms(double duty, double freq_hz);

ControlValues joint_to_control(const JointAngles& j, const ControlCalibration& cal);

enum class PinKind { Gpio, Ground, Power3v3, Power5v, Reserved };

struct PinFunction {
    PinKind kind;
    int gpio;  // valid when kind == Gpio
};

std::string pin_function_label(const PinFunction& f);

// Physical header pin (1-40) to its function. Throws UnknownPin.
PinFunction pin_function(int board_pin);

// BOARD-mode lookup: GPIO number at a physical pin. Throws NotAGpioPin for
// power/ground/reserved pins, UnknownPin outside 1-40.
int gpio_at_board_pin(int board_pin);

// BCM-mode lookup: physical pin carrying a GPIO number. Throws UnknownPin.
int board_pin_of_gpio(int gpio);

std::vector<int> all_gpio_numbers();

class PwmBackend {
public:
    virtual ~PwmBackend() = default;
    virtual void append(const PwmCommand& cmd) = 0;
    virtual std::vector<PwmCommand> snapshot() const = 0;
};

// In-memory append log; the extension point for real hardware.
class SimulatedPwmBackend : public PwmBackend {
public:
    void append(const PwmCommand& cmd) override { log_.push_back(cmd); }
    std::vector<PwmCommand> snapshot() const override { return log_; }

private:
    std::vector<PwmCommand> log_;
};

std::array<ServoSpec, 5> default_servos();

// Converts a pose into one PwmCommand per channel (0-3 joints, 4 gripper) and
// appends them to the backend in channel order. Out-of-range angles are
// clamped unless clamp_angles is false, in which case AngleOutOfRange escapes.
std::vector<PwmCommand> emit_pwm(const JointAngles& j,
                                 const std::array<ServoSpec, 5>& servos,
                                 const ControlCalibration& cal,
                                 DutyMapping mapping, long t_ms,
                                 PwmBackend& backend, bool clamp_angles = true);

}  // namespace arm
