// errors.hpp — Exception hierarchy shared by all bathent modules

#pragma once

#include <stdexcept>
#include <string>

namespace bathent {

/// Base class. `kind()` separates user/config mistakes from numerical breakdowns
/// so front ends can map them to distinct exit codes.
class Error : public std::runtime_error {
public:
    enum class Kind { InvalidConfig, Numerical };

    Error(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

class InvalidArgument : public Error {
public:
    explicit InvalidArgument(const std::string& what) : Error(Kind::InvalidConfig, what) {}
};

class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& what) : Error(Kind::InvalidConfig, what) {}
};

class NotNormalized : public Error {
public:
    explicit NotNormalized(const std::string& what) : Error(Kind::InvalidConfig, what) {}
};

class CapTooLarge : public Error {
public:
    explicit CapTooLarge(const std::string& what) : Error(Kind::InvalidConfig, what) {}
};

class NonHermitianInput : public Error {
public:
    explicit NonHermitianInput(const std::string& what) : Error(Kind::Numerical, what) {}
};

class QuadratureFailure : public Error {
public:
    explicit QuadratureFailure(const std::string& what) : Error(Kind::Numerical, what) {}
};

class ConvergenceFailure : public Error {
public:
    explicit ConvergenceFailure(const std::string& what) : Error(Kind::Numerical, what) {}
};

} // namespace bathent
