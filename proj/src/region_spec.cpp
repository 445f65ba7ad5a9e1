#include "kspec/region_spec.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "kspec/errors.hpp"

namespace kspec {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) parts.push_back(item);
  return parts;
}

double parse_number(const std::string& token, const std::string& context) {
  try {
    std::size_t used = 0;
    const double v = std::stod(token, &used);
    if (used != token.size() || !std::isfinite(v)) throw std::invalid_argument(token);
    return v;
  } catch (const std::exception&) {
    throw InputError("region '" + context + "': bad number '" + token + "'");
  }
}

Circle parse_circle(const std::string& body, const std::string& context) {
  const auto fields = split(body, ',');
  if (fields.size() != 3) throw InputError("region '" + context + "': expected cx,cy,R");
  Circle c{cplx(parse_number(fields[0], context), parse_number(fields[1], context)),
           parse_number(fields[2], context)};
  if (!(c.radius > 0.0)) throw InputError("region '" + context + "': radius must be positive");
  return c;
}

}  // namespace

RegionSpec parse_region(const std::string& text) {
  const auto colon = text.find(':');
  const std::string head = text.substr(0, colon);
  const std::string body = colon == std::string::npos ? "" : text.substr(colon + 1);
  if (head == "circle") return CircleRegion{parse_circle(body, text)};
  if (head == "circles") {
    CirclesRegion region;
    for (const auto& part : split(body, ';')) {
      if (!part.empty()) region.circles.push_back(parse_circle(part, text));
    }
    if (region.circles.empty()) throw InputError("region '" + text + "': no circles");
    return region;
  }
  if (head == "nr" && colon == std::string::npos) return NumericalRangeRegion{};
  if (head == "nr-scaled") {
    ScaledNumericalRangeRegion region;
    if (!body.empty()) {
      region.epsilon = parse_number(body, text);
      if (!(region.epsilon > 0.0 && region.epsilon < 1.0)) {
        throw InputError("region '" + text + "': eps must lie in (0, 1)");
      }
    }
    return region;
  }
  if (head == "mec-scaled") {
    const double factor = parse_number(body, text);
    if (!(factor > 0.0)) throw InputError("region '" + text + "': factor must be positive");
    return ScaledMecRegion{factor};
  }
  throw InputError("unknown region '" + text + "'");
}

Circle region_disk(const RegionSpec& spec, const ComplexMatrix& A) {
  if (const auto* c = std::get_if<CircleRegion>(&spec)) return c->circle;
  if (const auto* m = std::get_if<ScaledMecRegion>(&spec)) {
    Circle mec = min_enclosing_circle(spectrum(A));
    mec.radius *= m->factor;
    if (!(mec.radius > 0.0)) {
      throw InputError("mec-scaled: spectrum is a single point, the scaled circle is degenerate");
    }
    return mec;
  }
  throw InputError("region is not a disk (use circle:... or mec-scaled:...)");
}

CurveFactory region_factory(const RegionSpec& spec, const ComplexMatrix& A, double default_epsilon) {
  return std::visit(
      [&](const auto& region) -> CurveFactory {
        using T = std::decay_t<decltype(region)>;
        if constexpr (std::is_same_v<T, CircleRegion>) {
          const Circle c = region.circle;
          return [c](int nodes) { return circle_curve(c, nodes); };
        } else if constexpr (std::is_same_v<T, CirclesRegion>) {
          const auto circles = region.circles;
          return [circles](int nodes) { return union_of_circles(circles, nodes); };
        } else if constexpr (std::is_same_v<T, NumericalRangeRegion>) {
          const ComplexMatrix M = A;
          return [M](int nodes) { return numerical_range_curve(M, std::max(1024, nodes), nodes); };
        } else if constexpr (std::is_same_v<T, ScaledNumericalRangeRegion>) {
          const double eps = region.epsilon > 0.0 ? region.epsilon : default_epsilon;
          if (!(eps > 0.0 && eps < 1.0)) throw InputError("nr-scaled: eps must lie in (0, 1)");
          const ComplexMatrix M = A;
          return [M, eps](int nodes) {
            const BoundaryCurve boundary = numerical_range_curve(M, std::max(1024, nodes), nodes);
            return scale_inward_curve(boundary, eps, boundary_centroid(boundary));
          };
        } else {
          const Circle c = region_disk(region, A);
          return [c](int nodes) { return circle_curve(c, nodes); };
        }
      },
      spec);
}

}  // namespace kspec
