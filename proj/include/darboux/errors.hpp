#pragma once

#include <stdexcept>
#include <string>

namespace darboux {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& what = "division by zero") : Error(what) {}
};

struct TowerMismatch : Error {
    explicit TowerMismatch(const std::string& what = "elements belong to different field towers")
        : Error(what) {}
};

struct InvalidExtension : Error {
    explicit InvalidExtension(const std::string& what) : Error(what) {}
};

// Raised when an inversion exposes a zero divisor, i.e. some step of the
// tower was built on a reducible modulus.  Carries the factor found.
struct ReducibleModulus : Error {
    std::string factor;
    ReducibleModulus(const std::string& what, std::string factor_)
        : Error(what), factor(std::move(factor_)) {}
};

struct ValuationError : Error {
    explicit ValuationError(const std::string& what) : Error(what) {}
};

struct CompositionError : Error {
    explicit CompositionError(const std::string& what) : Error(what) {}
};

struct NormalizationError : Error {
    explicit NormalizationError(const std::string& what) : Error(what) {}
};

struct DegenerateExponents : Error {
    explicit DegenerateExponents(const std::string& what) : Error(what) {}
};

struct PointNotOnCurve : Error {
    explicit PointNotOnCurve(const std::string& what) : Error(what) {}
};

struct RankDeficient : Error {
    explicit RankDeficient(const std::string& what) : Error(what) {}
};

}  // namespace darboux
