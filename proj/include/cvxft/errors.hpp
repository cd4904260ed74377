#ifndef CVXFT_ERRORS_HPP
#define CVXFT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cvxft {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// argument outside an operation's domain (zero vector, |eta| out of range, ...)
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error("domain error: " + msg) {}
};

// evaluation method not defined for this body kind / dimension
struct MethodUnavailableError : Error {
    explicit MethodUnavailableError(const std::string& msg) : Error("method unavailable: " + msg) {}
};

// requested resolution too coarse for the quantity being resolved
struct ResolutionError : Error {
    explicit ResolutionError(const std::string& msg) : Error("resolution error: " + msg) {}
};

// direction normal to a flat face of a piecewise body: support maximizer is a face, not a point
struct NonUniqueMaximizerError : Error {
    explicit NonUniqueMaximizerError(const std::string& msg) : Error("non-unique maximizer: " + msg) {}
};

// frequency outside the normal cone an estimate is valid in
struct ConeViolationError : Error {
    explicit ConeViolationError(const std::string& msg) : Error("cone violation: " + msg) {}
};

// gaussian curvature vanishes where the stationary-phase model needs it
struct DegenerateCurvatureError : Error {
    explicit DegenerateCurvatureError(const std::string& msg) : Error("degenerate curvature: " + msg) {}
};

// candidate spectrum too sparse to run the translation pipeline
struct DensityFailureError : Error {
    explicit DensityFailureError(const std::string& msg) : Error("density failure: " + msg) {}
};

struct InsufficientDataError : Error {
    explicit InsufficientDataError(const std::string& msg) : Error("insufficient data: " + msg) {}
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& msg) : Error("config error: " + msg) {}
};

} // namespace cvxft

#endif
