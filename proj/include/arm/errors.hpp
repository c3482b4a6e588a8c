#pragma once

#include <stdexcept>
#include <string>

namespace arm {

// Base for every error the library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class TriangleInequalityViolated : public Error {
public:
    using Error::Error;
};

class DegenerateAtShoulder : public Error {
public:
    using Error::Error;
};

class Unreachable : public Error {
public:
    using Error::Error;
};

class NonPositiveInput : public Error {
public:
    using Error::Error;
};

class OutOfView : public Error {
public:
    using Error::Error;
};

class AngleOutOfRange : public Error {
public:
    using Error::Error;
};

class NotAGpioPin : public Error {
public:
    using Error::Error;
};

class UnknownPin : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(int line, const std::string& reason)
        : Error("parse error at line " + std::to_string(line) + ": " + reason),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

class ValidationError : public Error {
public:
    ValidationError(const std::string& key, const std::string& reason)
        : Error("invalid scenario: " + key + ": " + reason), key_(key) {}
    const std::string& key() const { return key_; }

private:
    std::string key_;
};

class ScenarioInvalid : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace arm
