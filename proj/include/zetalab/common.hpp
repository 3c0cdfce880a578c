#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace zetalab {

using Complex = std::complex<double>;
using SeedValue = std::uint64_t;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kTwoPi = 2.0 * kPi;

// Base class for every failure this library reports deliberately.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Evaluation requested too close to a pole of the target function.
struct PolePoint : Error {
    using Error::Error;
};

// An argument lies outside the method's validity region (Mellin strip,
// divergent moment order, missing decay certificate, ...).
struct DomainError : Error {
    using Error::Error;
};

// The evaluation budget was exhausted before the error bound reached the
// requested tolerance; the message carries the best bound achieved.
struct ToleranceNotMet : Error {
    ToleranceNotMet(const std::string& what, double achieved)
        : Error(what), achieved_bound(achieved) {}
    double achieved_bound;
};

}  // namespace zetalab
