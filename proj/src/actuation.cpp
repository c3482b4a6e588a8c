#include "arm/actuation.hpp"

#include <algorithm>
#include <cmath>

namespace arm {
namespace {

constexpr double kPi = 3.14159265358979323846;

struct PinEntry {
    int board;
    PinFunction fn;
};

// 40-pin header layout. Pins 8 and 10 carry the UART alternate function on
// GPIO 14 / GPIO 15; pins 27 and 28 are reserved.
constexpr PinEntry kPinTable[40] = {
    {1, {PinKind::Power3v3, -1}},  {2, {PinKind::Power5v, -1}},
    {3, {PinKind::Gpio, 2}},       {4, {PinKind::Power5v, -1}},
    {5, {PinKind::Gpio, 3}},       {6, {PinKind::Ground, -1}},
    {7, {PinKind::Gpio, 4}},       {8, {PinKind::Gpio, 14}},
    {9, {PinKind::Ground, -1}},    {10, {PinKind::Gpio, 15}},
    {11, {PinKind::Gpio, 17}},     {12, {PinKind::Gpio, 18}},
    {13, {PinKind::Gpio, 27}},     {14, {PinKind::Ground, -1}},
    {15, {PinKind::Gpio, 22}},     {16, {PinKind::Gpio, 23}},
    {17, {PinKind::Power3v3, -1}}, {18, {PinKind::Gpio, 24}},
    {19, {PinKind::Gpio, 10}},     {20, {PinKind::Ground, -1}},
    {21, {PinKind::Gpio, 9}},      {22, {PinKind::Gpio, 25}},
    {23, {PinKind::Gpio, 11}},     {24, {PinKind::Gpio, 8}},
    {25, {PinKind::Ground, -1}},   {26, {PinKind::Gpio, 7}},
    {27, {PinKind::Reserved, -1}}, {28, {PinKind::Reserved, -1}},
    {29, {PinKind::Gpio, 5}},      {30, {PinKind::Ground, -1}},
    {31, {PinKind::Gpio, 6}},      {32, {PinKind::Gpio, 12}},
    {33, {PinKind::Gpio, 13}},     {34, {PinKind::Ground, -1}},
    {35, {PinKind::Gpio, 19}},     {36, {PinKind::Gpio, 16}},
    {37, {PinKind::Gpio, 26}},     {38, {PinKind::Gpio, 20}},
    {39, {PinKind::Ground, -1}},   {40, {PinKind::Gpio, 21}},
};

}  // namespace

double angle_to_duty(double angle_deg, DutyMapping mapping) {
    if (angle_deg < 0.0 || angle_deg > 180.0) {
        throw AngleOutOfRange("angle " + std::to_string(angle_deg) +
                              " outside [0, 180] degrees");
    }
    const double divisor = mapping == DutyMapping::Paper ? 180.0 : 18.0;
    return angle_deg / divisor + 2.0;
}

double duty_to_pulse_ms(double duty, double freq_hz) {
    if (freq_hz <= 0) {
        throw NonPositiveInput("PWM frequency must be positive");
    }
    return duty / 100.0 * (1000.0 / freq_hz);
}

ControlValues joint_to_control(const JointAngles& j, const ControlCalibration& cal) {
    ControlValues v;
    v.v0 = cal.offset0 + cal.slope * j.theta0;
    v.v1 = cal.offset1 + cal.slope * (kPi / 2.0 - j.theta1);
    v.v2 = cal.offset2 + cal.slope * (kPi - j.theta2);
    v.v3 = (j.theta1 + j.theta2 - kPi) / cal.divisor3;
    return v;
}

std::string pin_function_label(const PinFunction& f) {
    switch (f.kind) {
        case PinKind::Gpio: return "GPIO " + std::to_string(f.gpio);
        case PinKind::Ground: return "GND";
        case PinKind::Power3v3: return "3.3V PWR";
        case PinKind::Power5v: return "5V PWR";
        case PinKind::Reserved: return "Reserved";
    }
    return "?";
}

PinFunction pin_function(int board_pin) {
    if (board_pin < 1 || board_pin > 40) {
        throw UnknownPin("physical pin " + std::to_string(board_pin) +
                         " is not on the 40-pin header");
    }
    return kPinTable[board_pin - 1].fn;
}

int gpio_at_board_pin(int board_pin) {
    const PinFunction f = pin_function(board_pin);
    if (f.kind != PinKind::Gpio) {
        throw NotAGpioPin("pin " + std::to_string(board_pin) + " is " +
                          pin_function_label(f));
    }
    return f.gpio;
}

int board_pin_of_gpio(int gpio) {
    for (const PinEntry& e : kPinTable) {
        if (e.fn.kind == PinKind::Gpio && e.fn.gpio == gpio) return e.board;
    }
    throw UnknownPin("GPIO " + std::to_string(gpio) + " is not on the header");
}

std::vector<int> all_gpio_numbers() {
    std::vector<int> out;
    for (const PinEntry& e : kPinTable) {
        if (e.fn.kind == PinKind::Gpio) out.push_back(e.fn.gpio);
    }
    return out;
}

std::array<ServoSpec, 5> default_servos() {
    return {{
        {"MG996", 0, 11},
        {"MG995", 1, 13},
        {"MG995", 2, 15},
        {"MG90S", 3, 29},
        {"MG90S", 4, 31},
    }};
}

std::vector<PwmCommand> emit_pwm(const JointAngles& j,
                                 const std::array<ServoSpec, 5>& servos,
                                 const ControlCalibration& /*cal*/,
                                 DutyMapping mapping, long t_ms,
                                 PwmBackend& backend, bool clamp_angles) {
    const double joint_rad[4] = {j.theta0, j.theta1, j.theta2, j.theta3};
    std::vector<PwmCommand> out;
    out.reserve(servos.size());
    for (const ServoSpec& s : servos) {
        double deg;
        if (s.channel == 4) {
            deg = j.gripper == GripperState::Open ? s.angle_min : s.angle_max;
        } else {
            deg = joint_rad[s.channel] * 180.0 / kPi;
        }
        if (clamp_angles) {
            deg = std::clamp(deg, s.angle_min, s.angle_max);
        } else if (deg < s.angle_min || deg > s.angle_max) {
            throw AngleOutOfRange("channel " + std::to_string(s.channel) +
                                  " angle " + std::to_string(deg) +
                                  " outside servo range");
        }
        PwmCommand cmd;
        cmd.channel = s.channel;
        cmd.duty = angle_to_duty(deg, mapping);
        cmd.pulse_ms = duty_to_pulse_ms(cmd.duty, s.pwm_freq);
        cmd.t_ms = t_ms;
        backend.append(cmd);
        out.push_back(cmd);
    }
    return out;
}

}  // namespace arm
