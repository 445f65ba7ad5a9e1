#pragma once

#include <string>
#include <variant>
#include <vector>

#include "kspec/matkernel.hpp"
#include "kspec/regions.hpp"
#include "kspec/spectralset.hpp"

namespace kspec {

// Region mini-language:
//   circle:cx,cy,R          one circle
//   circles:cx,cy,R;...     union of disjoint circles
//   nr                      boundary of the numerical range
//   nr-scaled[:eps]         numerical range boundary shrunk by (1 - eps) toward its centroid
//   mec-scaled:factor       minimal enclosing circle of the spectrum, radius times factor

struct CircleRegion {
  Circle circle;
};
struct CirclesRegion {
  std::vector<Circle> circles;
};
struct NumericalRangeRegion {};
struct ScaledNumericalRangeRegion {
  double epsilon = -1.0;  ///< negative: take it from --eps
};
struct ScaledMecRegion {
  double factor = 1.0;
};

using RegionSpec = std::variant<CircleRegion, CirclesRegion, NumericalRangeRegion,
                                ScaledNumericalRangeRegion, ScaledMecRegion>;

/// Throws InputError on malformed text.
RegionSpec parse_region(const std::string& text);

/// Resolves a region against A: returns a factory producing the curve at a node count.
/// `default_epsilon` fills nr-scaled without an inline value.
CurveFactory region_factory(const RegionSpec& spec, const ComplexMatrix& A,
                            double default_epsilon = 0.05);

/// The disk behind a circle or mec-scaled region; InputError for other kinds.
Circle region_disk(const RegionSpec& spec, const ComplexMatrix& A);

}  // namespace kspec
