#ifndef PGROW_ERROR_HPP
#define PGROW_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pgrow {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A function could not be evaluated at a requested point.
class EvaluationError : public Error {
public:
    EvaluationError(const std::string& msg, double x) : Error(msg), x_(x) {}
    double where() const { return x_; }

private:
    double x_;
};

// Bad argument / grid / input data.
class DomainError : public Error {
public:
    using Error::Error;
};

// A requested capability is absent (e.g. exact derivative on a sampled function).
class CapabilityError : public Error {
public:
    using Error::Error;
};

// An operation's mathematical precondition does not hold on the given inputs.
class PreconditionError : public Error {
public:
    using Error::Error;
};

// Division by a vanishing derivative or an integrand singularity was hit.
class SingularityError : public Error {
public:
    SingularityError(const std::string& msg, double location)
        : Error(msg), location_(location) {}
    double location() const { return location_; }

private:
    double location_;
};

// The order of A relative to M is not finite; the construction does not apply.
class InfiniteOrderError : public Error {
public:
    using Error::Error;
};

// Text could not be parsed; carries the offending offset.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t position)
        : Error(msg + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

class IoError : public Error {
public:
    using Error::Error;
};

} // namespace pgrow

#endif
