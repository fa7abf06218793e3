#pragma once

#include <stdexcept>
#include <string>

namespace sigmacurve {

struct CurveError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Curve definition problems.
struct NotCoprime : CurveError {
    using CurveError::CurveError;
};
struct SingularCurve : CurveError {
    using CurveError::CurveError;
};
struct UnsupportedFamily : CurveError {
    using CurveError::CurveError;
};
struct BadArity : CurveError {
    using CurveError::CurveError;
};
struct BranchPoint : CurveError {
    using CurveError::CurveError;
};

// Numerical-analysis failures.  Every one of these means "the computation is
// not trustworthy", never "the answer is probably fine".
struct QuadratureFailure : CurveError {
    using CurveError::CurveError;
};
struct HomologyFailure : CurveError {
    using CurveError::CurveError;
};
struct ReductionFailure : CurveError {
    using CurveError::CurveError;
};
struct NonPositiveImaginaryPart : CurveError {
    using CurveError::CurveError;
};
struct LegendreViolation : CurveError {
    using CurveError::CurveError;
};
struct NormalizationUnstable : CurveError {
    using CurveError::CurveError;
};
struct CharacteristicNotFound : CurveError {
    using CurveError::CurveError;
};
struct RootResolutionFailure : CurveError {
    using CurveError::CurveError;
};
struct DegenerateConfiguration : CurveError {
    using CurveError::CurveError;
};
struct BadInput : CurveError {
    using CurveError::CurveError;
};
// The chosen trivializing section vanishes at the requested point.
struct TrivializationZero : CurveError {
    using CurveError::CurveError;
};
// The evaluation point lies on the divisor of the function being inverted.
struct ZeroDivisorPoint : CurveError {
    using CurveError::CurveError;
};

}  // namespace sigmacurve
