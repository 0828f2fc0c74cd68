#pragma once

#include <stdexcept>
#include <string>

namespace subdiff {

// Base class for every error this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define SUBDIFF_DEFINE_ERROR(Name)                                  \
    class Name : public Error {                                     \
    public:                                                         \
        explicit Name(const std::string& what) : Error(what) {}     \
    }

// Mittag-Leffler evaluation
SUBDIFF_DEFINE_ERROR(InvalidOrder);
SUBDIFF_DEFINE_ERROR(NonConvergent);
SUBDIFF_DEFINE_ERROR(ContourError);
SUBDIFF_DEFINE_ERROR(StepTooLarge);

// Symbols and grids
SUBDIFF_DEFINE_ERROR(DimensionMismatch);
SUBDIFF_DEFINE_ERROR(NotElliptic);
SUBDIFF_DEFINE_ERROR(GridTooCoarse);
SUBDIFF_DEFINE_ERROR(SizeMismatch);

// Oracle backends
SUBDIFF_DEFINE_ERROR(PrecisionLoss);
SUBDIFF_DEFINE_ERROR(QuadratureNotConverged);

// Inverse problems
SUBDIFF_DEFINE_ERROR(NoConvergence);
SUBDIFF_DEFINE_ERROR(ObservationTimeTooEarly);
SUBDIFF_DEFINE_ERROR(SolvabilityFailed);
SUBDIFF_DEFINE_ERROR(BracketError);
SUBDIFF_DEFINE_ERROR(OrderTooCloseToOne);
SUBDIFF_DEFINE_ERROR(LambdaBelowThreshold);
SUBDIFF_DEFINE_ERROR(LambdaEqualsOne);
SUBDIFF_DEFINE_ERROR(NormalizationError);

// I/O
SUBDIFF_DEFINE_ERROR(IOError);

#undef SUBDIFF_DEFINE_ERROR

} // namespace subdiff
