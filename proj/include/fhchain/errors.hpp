#pragma once

#include <stdexcept>
#include <string>

namespace fhchain {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EvaluationAtSingularity : Error { using Error::Error; };
struct AnnulusViolation : Error { using Error::Error; };
struct NotJumpForm : Error { using Error::Error; };
struct WindingNonzero : Error { using Error::Error; };
struct QuadratureUnderResolved : Error { using Error::Error; };
struct SeriesDiverged : Error { using Error::Error; };
struct SlowConvergence : Error { using Error::Error; };
struct PoleArgument : Error { using Error::Error; };
struct ExcludedCase : Error { using Error::Error; };
struct NoAdmissibleRepresentation : Error { using Error::Error; };
struct VanishingSymbol : Error { using Error::Error; };
struct OutOfDomain : Error { using Error::Error; };
struct BoundaryRegime : Error { using Error::Error; };

} // namespace fhchain
