#ifndef TPDICKE_ERRORS_HPP
#define TPDICKE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tpdicke {

struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// g >= omega/2: spectrum collapsed, ground state undefined.
struct CollapseError : std::runtime_error {
    explicit CollapseError(const std::string& what) : std::runtime_error(what) {}
};

// Operation invoked in the wrong phase, or inside the near-critical guard band.
struct PhaseError : std::runtime_error {
    explicit PhaseError(const std::string& what) : std::runtime_error(what) {}
};

// Quadratic boson form has no harmonic ground state (E_exc^2 <= 0).
struct InstabilityError : std::runtime_error {
    explicit InstabilityError(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionError : std::runtime_error {
    explicit DimensionError(const std::string& what) : std::runtime_error(what) {}
};

struct ConvergenceError : std::runtime_error {
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

struct InsufficientDataError : std::runtime_error {
    explicit InsufficientDataError(const std::string& what) : std::runtime_error(what) {}
};

struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace tpdicke

#endif
