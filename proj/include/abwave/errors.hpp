#ifndef ABWAVE_ERRORS_HPP
#define ABWAVE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace abwave {

// Base class for all domain errors so callers can catch the family at once.
struct AbError : std::runtime_error {
    explicit AbError(const std::string& msg) : std::runtime_error(msg) {}
};

#define ABWAVE_DEFINE_ERROR(Name)                                      \
    struct Name : AbError {                                            \
        explicit Name(const std::string& msg) : AbError(#Name ": " + msg) {} \
    }

ABWAVE_DEFINE_ERROR(PointOnContour);
ABWAVE_DEFINE_ERROR(ContourIntersectsObstacle);
ABWAVE_DEFINE_ERROR(EvaluationAtCenter);
ABWAVE_DEFINE_ERROR(BadBasis);
ABWAVE_DEFINE_ERROR(GrazingIncidence);
ABWAVE_DEFINE_ERROR(TooManyReflections);
ABWAVE_DEFINE_ERROR(FamilyCaustic);
ABWAVE_DEFINE_ERROR(OutsideTube);
ABWAVE_DEFINE_ERROR(SourceSingularity);
ABWAVE_DEFINE_ERROR(NonconvergentTail);
ABWAVE_DEFINE_ERROR(CausticError);
ABWAVE_DEFINE_ERROR(LinearSolveFailure);
ABWAVE_DEFINE_ERROR(NormLossExceeded);
ABWAVE_DEFINE_ERROR(EdgeThroughFluxCenter);
ABWAVE_DEFINE_ERROR(ErrorBudgetExceeded);
ABWAVE_DEFINE_ERROR(NoPathFound);
ABWAVE_DEFINE_ERROR(DegenerateGeometry);
ABWAVE_DEFINE_ERROR(InitialDataDegenerate);
ABWAVE_DEFINE_ERROR(VanishingModulus);
ABWAVE_DEFINE_ERROR(ParseError);

#undef ABWAVE_DEFINE_ERROR

}  // namespace abwave

#endif
