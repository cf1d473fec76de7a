#pragma once

#include <stdexcept>
#include <string>

namespace armfatigue {

/// Invalid input data (bad subject, malformed scenario field, ...).
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

class KinematicsError : public std::runtime_error {
public:
    explicit KinematicsError(const std::string& what) : std::runtime_error(what) {}
};

/// Target lies outside the reachable annulus.
class UnreachableTargetError : public KinematicsError {
public:
    explicit UnreachableTargetError(const std::string& what) : KinematicsError(what) {}
};

/// Target lies exactly on the annulus boundary (stretched or folded singularity).
class SingularPostureError : public KinematicsError {
public:
    explicit SingularPostureError(const std::string& what) : KinematicsError(what) {}
};

/// A model guard failed mid-run (e.g. non-positive MVC at the current posture).
/// Carries the simulation time at which the guard tripped.
class GuardViolation : public std::runtime_error {
public:
    GuardViolation(const std::string& what, double time_s)
        : std::runtime_error(what), time_s_(time_s) {}
    double time_s() const { return time_s_; }

private:
    double time_s_;
};

class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace armfatigue
