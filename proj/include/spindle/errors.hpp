#pragma once

#include <stdexcept>
#include <string>

namespace spindle {

// Common base so callers can catch the library as a whole.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OutOfRange : Error { using Error::Error; };
struct DegenerateEdge : Error { using Error::Error; };
struct InvalidSplit : Error { using Error::Error; };
struct NonFinite : Error { using Error::Error; };
struct SelfIntersection : Error { using Error::Error; };
struct ChartViolation : Error { using Error::Error; };
struct EpsilonTooLarge : Error { using Error::Error; };
struct QuadratureFailure : Error { using Error::Error; };
struct PremiseViolated : Error { using Error::Error; };
struct NoConvergence : Error { using Error::Error; };
struct NegativeEigenvalue : Error { using Error::Error; };
struct MeshQualityFailure : Error { using Error::Error; };
struct BadRegionSpec : Error { using Error::Error; };
struct DegenerateTriangle : Error { using Error::Error; };
struct SolverStagnation : Error { using Error::Error; };

}  // namespace spindle
