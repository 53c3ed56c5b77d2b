#pragma once

#include <stdexcept>
#include <string>

namespace paulicap {

// Common base so callers can catch everything thrown by this library at once.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class DimError : public Error {
public:
    explicit DimError(const std::string& msg) : Error(msg) {}
};

class InvalidState : public Error {
public:
    explicit InvalidState(const std::string& msg) : Error(msg) {}
};

class NotHermitian : public Error {
public:
    explicit NotHermitian(const std::string& msg) : Error(msg) {}
};

class NotPSD : public Error {
public:
    explicit NotPSD(const std::string& msg) : Error(msg) {}
};

class InvalidDistribution : public Error {
public:
    explicit InvalidDistribution(const std::string& msg) : Error(msg) {}
};

class Unsupported : public Error {
public:
    explicit Unsupported(const std::string& msg) : Error(msg) {}
};

class ShapeError : public Error {
public:
    explicit ShapeError(const std::string& msg) : Error(msg) {}
};

// Thrown by ansatz decoders when the parameterization collapses to the zero
// vector and no state can be normalized out of it.
class DegenerateState : public Error {
public:
    explicit DegenerateState(const std::string& msg) : Error(msg) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& msg) : Error(msg) {}
};

} // namespace paulicap
