#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace c2 {

// Every library failure carries a stable machine-readable code (e.g.
// "overflow", "invalid-argument") and an optional detail string naming the
// offending hypothesis or parameter. The cli maps codes onto exit statuses.
class Error : public std::runtime_error {
public:
    Error(std::string code, std::string detail, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)), detail_(std::move(detail)) {}

    const std::string& code() const noexcept { return code_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    std::string code_;
    std::string detail_;
};

class InvalidArgument : public Error {
public:
    explicit InvalidArgument(const std::string& message, std::string detail = {})
        : Error("invalid-argument", std::move(detail), message) {}
};

// Requested range exceeds a memory budget or a table does not cover the
// numbers an operation needs.
class RangeError : public Error {
public:
    RangeError(std::string code, const std::string& message, std::string detail = {})
        : Error(std::move(code), std::move(detail), message) {}
};

class OverflowError : public Error {
public:
    explicit OverflowError(const std::string& message, std::string detail = {})
        : Error("overflow", std::move(detail), message) {}
};

// A mathematical hypothesis of an operation does not hold; detail() names it.
class PreconditionViolation : public Error {
public:
    PreconditionViolation(std::string which, const std::string& message)
        : Error("precondition-violation", std::move(which), message) {}
    const std::string& which() const noexcept { return detail(); }
};

// A candidate was examined and found not to qualify. Not a bug.
class Rejection : public Error {
public:
    Rejection(std::string reason, const std::string& message)
        : Error("rejection", std::move(reason), message) {}
    const std::string& reason() const noexcept { return detail(); }
};

// Two independent computations disagreed, or a proven invariant failed.
class InternalError : public Error {
public:
    InternalError(std::string what, const std::string& message)
        : Error("internal", std::move(what), message) {}
};

}  // namespace c2
