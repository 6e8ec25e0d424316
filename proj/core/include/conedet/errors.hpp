#pragma once

#include <stdexcept>
#include <string>

namespace conedet {

// Root of the library's error hierarchy. Every throwing contract in the
// public API raises a subclass of Error; callers that only care about
// "conedet failed" can catch this one.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define CONEDET_DEFINE_ERROR(Name)                                        \
    class Name : public Error {                                           \
    public:                                                                \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
    }

// metric
CONEDET_DEFINE_ERROR(EvaluationAtSingularity);
CONEDET_DEFINE_ERROR(InvalidChart);
CONEDET_DEFINE_ERROR(NonConvergentQuadrature);
CONEDET_DEFINE_ERROR(InvalidMetricSpec);

// cover
CONEDET_DEFINE_ERROR(NonSimpleCriticalPoint);
CONEDET_DEFINE_ERROR(CriticalValueAtInfinity);
CONEDET_DEFINE_ERROR(RootFindingFailure);
CONEDET_DEFINE_ERROR(DegenerateModuli);
CONEDET_DEFINE_ERROR(EvaluationAtConePoint);
CONEDET_DEFINE_ERROR(SeriesInversionFailure);
CONEDET_DEFINE_ERROR(InvalidCover);

// mesh
CONEDET_DEFINE_ERROR(ConePointsTooClose);
CONEDET_DEFINE_ERROR(QualityFailure);
CONEDET_DEFINE_ERROR(MeshFormatError);

// fem
CONEDET_DEFINE_ERROR(QuadratureFailure);
CONEDET_DEFINE_ERROR(ConvergenceFailure);
CONEDET_DEFINE_ERROR(SolverFailure);
CONEDET_DEFINE_ERROR(CutoffOverlap);

// asymptotics
CONEDET_DEFINE_ERROR(RadiusOutsideSeriesDisk);
CONEDET_DEFINE_ERROR(IllConditionedFit);

// zeta
CONEDET_DEFINE_ERROR(LogTermDetected);
CONEDET_DEFINE_ERROR(TailDominatedError);

// harness
CONEDET_DEFINE_ERROR(GroupTrackingFailure);
CONEDET_DEFINE_ERROR(ConfigError);

#undef CONEDET_DEFINE_ERROR

} // namespace conedet
