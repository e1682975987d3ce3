#pragma once

#include <stdexcept>
#include <string>

namespace hfk {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    using Error::Error;
};

/// Machine-readable reasons a diagram fails validation.
enum class ViolationCode {
    SelfIntersecting,
    NotTransverse,
    BasepointOnCurve,
    IntersectionNumberNotUnit,
    NullHomotopicCurve,
    DuplicateBasepoint,
};

std::string to_string(ViolationCode code);

struct ValidationError : Error {
    ValidationError(ViolationCode c, const std::string& detail)
        : Error(to_string(c) + ": " + detail), code(c) {}
    ViolationCode code;
};

struct UnknownDiagram : Error {
    using Error::Error;
};

struct DifferentialNotSquareZero : Error {
    using Error::Error;
};

struct WindowTooSmall : Error {
    using Error::Error;
};

struct StabilizationLimitExceeded : Error {
    using Error::Error;
};

struct NonIntegralMaslov : Error {
    using Error::Error;
};

struct SignAssignmentFailed : Error {
    using Error::Error;
};

struct NormalizationAmbiguous : Error {
    using Error::Error;
};

struct AsymmetricEuler : Error {
    using Error::Error;
};

struct TruncationUnstable : Error {
    using Error::Error;
};

struct NotAKnotPolynomial : Error {
    using Error::Error;
};

struct GammaNotInHandle : Error {
    using Error::Error;
};

}  // namespace hfk
