#include "chainconic/conic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace chainconic {

std::string_view to_string(ConicKind kind) {
  switch (kind) {
    case ConicKind::Ellipse: return "Ellipse";
    case ConicKind::Hyperbola: return "Hyperbola";
    case ConicKind::Parabola: return "Parabola";
    case ConicKind::Circle: return "Circle";
  }
  return "Unknown";
}

namespace {

template <Scalar S>
double relative_gap(const S& value, const S& reference) {
  const double ref = std::abs(to_double(reference));
  const double gap = std::abs(to_double(S(value - reference)));
  return ref > 0.0 ? gap / ref : gap;
}

template <Scalar S>
double polygon_diameter(const CenterPolygon<S>& polygon) {
  double d2 = 0.0;
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    for (std::size_t j = i + 1; j < polygon.size(); ++j) {
      d2 = std::max(d2, to_double(squared_distance(polygon.vertices[i], polygon.vertices[j])));
    }
  }
  return d2 > 0.0 ? std::sqrt(d2) : 1.0;
}

}  // namespace

template <Scalar S>
ConicKind classify(const Point<S>& focus_k, const GeneralizedCircle<S>& carrier_l, const S& r_sq, Tolerance tol) {
  const auto* circle = std::get_if<ProperCircle<S>>(&carrier_l);
  if (circle == nullptr) return ConicKind::Parabola;
  const S focal_sq = squared_distance(focus_k, circle->center);
  const double bound = tol.relative * std::max(to_double(focal_sq), to_double(r_sq));
  if (!(S(0) < r_sq) || negligible(r_sq, bound)) {
    throw GeometryError(ErrorKind::DegenerateConic, "reflected-focus circle has zero radius");
  }
  if (negligible(focal_sq, bound)) return ConicKind::Circle;
  if (negligible(S(focal_sq - r_sq), bound)) {
    throw GeometryError(ErrorKind::DegenerateConic, "reflected-focus radius equals the focal distance");
  }
  return focal_sq < r_sq ? ConicKind::Ellipse : ConicKind::Hyperbola;
}

template <Scalar S>
bool position_predicts_kind(const Point<S>& focus_k, const GeneralizedCircle<S>& carrier_l, ConicKind kind) {
  const auto* circle = std::get_if<ProperCircle<S>>(&carrier_l);
  if (circle == nullptr) return kind == ConicKind::Parabola;
  const S inside = squared_distance(focus_k, circle->center) - circle->radius_sq;
  if (inside < S(0)) return kind == ConicKind::Ellipse || kind == ConicKind::Circle;
  if (S(0) < inside) return kind == ConicKind::Hyperbola;
  return false;
}

template <Scalar S>
FocalConic<S> conic_from_focus_tangent(const Point<S>& focus_k, const Point<S>& focus_l, const Line<S>& tangent,
                                       Tolerance tol) {
  const double scale = std::sqrt(to_double(squared_distance(focus_k, focus_l))) + 1.0;
  if (on_line(focus_k, tangent, tol, scale)) {
    throw GeometryError(ErrorKind::FocusOnTangent, "focus K lies on the tangent line");
  }
  const Point<S> reflected = reflect_point(focus_k, tangent);
  const S r_sq = squared_distance(focus_l, reflected);
  const GeneralizedCircle<S> carrier = ProperCircle<S>{focus_l, S(1)};
  FocalConic<S> conic;
  conic.kind = classify(focus_k, carrier, r_sq, tol);
  conic.shape = CentralConic<S>{focus_k, focus_l, r_sq};
  return conic;
}

template <Scalar S>
InscribedConic<S> verify_inscribed_conic(const Point<S>& focus_k, const GeneralizedCircle<S>& carrier_l,
                                         const CenterPolygon<S>& polygon, Tolerance tol) {
  const std::size_t n = polygon.size();
  if (n < 3) throw GeometryError(ErrorKind::InvalidArgument, "polygon needs at least 3 vertices");
  const double scale = polygon_diameter(polygon);

  InscribedConic<S> result;
  result.certificates.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Line<S> side = polygon.side(i);
    if (on_line(focus_k, side, tol, scale)) {
      throw GeometryError(ErrorKind::FocusOnTangent, "focus K lies on side " + std::to_string(i + 1), i + 1);
    }
    result.certificates.push_back({side, reflect_point(focus_k, side), std::nullopt});
  }

  if (const auto* circle = std::get_if<ProperCircle<S>>(&carrier_l)) {
    std::size_t worst = 0;
    double worst_gap = 0.0;
    double max_gap = 0.0;
    result.certificates[0].dist_sq_to_l = squared_distance(result.certificates[0].reflected_focus, circle->center);
    const S first = *result.certificates[0].dist_sq_to_l;
    for (std::size_t i = 1; i < n; ++i) {
      auto& cert = result.certificates[i];
      cert.dist_sq_to_l = squared_distance(cert.reflected_focus, circle->center);
      const double gap = relative_gap(*cert.dist_sq_to_l, first);
      const bool equal = ScalarTraits<S>::exact ? *cert.dist_sq_to_l == first : gap <= tol.relative;
      max_gap = std::max(max_gap, gap);
      if (!equal && (worst == 0 || gap > worst_gap)) {
        worst = i + 1;
        worst_gap = gap;
      }
    }
    result.max_relative_spread = max_gap;
    if (worst != 0) {
      throw GeometryError(ErrorKind::NotInscribed,
                          "side " + std::to_string(worst) + " is not tangent to the conic of side 1", worst,
                          std::nullopt, worst_gap);
    }
    const S& r_sq = *result.certificates[0].dist_sq_to_l;
    result.conic.kind = classify(focus_k, carrier_l, r_sq, tol);
    result.conic.shape = CentralConic<S>{focus_k, circle->center, r_sq};
    return result;
  }

  // Straight carrier: the reflections of K lie on the directrix, parallel to c(L).
  const auto& carrier_line = std::get<StraightLine<S>>(carrier_l).line;
  const auto& t0 = result.certificates[0].reflected_focus;
  std::size_t far = 0;
  S far_d2(0);
  for (std::size_t i = 1; i < n; ++i) {
    const S d2 = squared_distance(t0, result.certificates[i].reflected_focus);
    if (far_d2 < d2) {
      far_d2 = d2;
      far = i;
    }
  }
  const double spread = std::sqrt(to_double(far_d2));
  if (far == 0 || negligible(far_d2, tol.relative * scale * scale)) {
    throw GeometryError(ErrorKind::DegenerateConic, "all reflected foci coincide; directrix undefined");
  }
  const Line<S> directrix = line_through(t0, result.certificates[far].reflected_focus);
  std::size_t worst = 0;
  double worst_gap = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& t = result.certificates[i].reflected_focus;
    const double gap = std::abs(to_double(directrix.evaluate(t))) /
                       std::hypot(to_double(directrix.a), to_double(directrix.b)) / spread;
    if (gap > worst_gap) worst_gap = gap;
    if (!on_line(t, directrix, tol, spread) && worst == 0) worst = i + 1;
  }
  result.max_relative_spread = worst_gap;
  if (worst != 0) {
    throw GeometryError(ErrorKind::NotInscribed, "reflected focus " + std::to_string(worst) + " is off the directrix",
                        worst, std::nullopt, worst_gap);
  }
  if (!parallel(directrix, carrier_line, tol)) {
    throw GeometryError(ErrorKind::NotInscribed, "directrix is not parallel to the carrier line", std::nullopt,
                        std::nullopt, worst_gap);
  }
  if (on_line(focus_k, directrix, tol, spread)) {
    throw GeometryError(ErrorKind::DegenerateConic, "directrix passes through the focus");
  }
  result.conic.kind = ConicKind::Parabola;
  result.conic.shape = FocalParabola<S>{focus_k, directrix};
  return result;
}

template <Scalar S>
bool is_tangent(const FocalConic<S>& conic, const Line<S>& line, Tolerance tol) {
  if (conic.is_parabola()) {
    const auto& parabola = conic.parabola();
    const Point<S> reflected = reflect_point(parabola.focus, line);
    const auto& d = parabola.directrix;
    const double focal_gap = std::abs(to_double(d.evaluate(parabola.focus))) / std::hypot(to_double(d.a), to_double(d.b));
    return on_line(reflected, d, tol, focal_gap);
  }
  const auto& central = conic.central();
  const S d2 = squared_distance(central.focus_l, reflect_point(central.focus_k, line));
  return negligible(S(d2 - central.r_sq), tol.relative * to_double(central.r_sq));
}

template <Scalar S>
S brianchon_residual(const CenterPolygon<S>& polygon) {
  if (polygon.size() != 6) {
    throw GeometryError(ErrorKind::WrongArity, "Brianchon check needs a hexagon, got " +
                                                   std::to_string(polygon.size()) + " vertices");
  }
  const auto& v = polygon.vertices;
  for (std::size_t i = 0; i < 3; ++i) {
    if (v[i] == v[i + 3]) {
      throw GeometryError(ErrorKind::DegenerateDiagonal,
                          "opposite vertices " + std::to_string(i + 1) + " and " + std::to_string(i + 4) + " coincide",
                          i + 1);
    }
  }
  return concurrency_residual(line_through(v[0], v[3]), line_through(v[1], v[4]), line_through(v[2], v[5]),
                              polygon_diameter(polygon));
}

template <Scalar S>
bool brianchon_check(const CenterPolygon<S>& polygon, Tolerance tol) {
  return negligible(brianchon_residual(polygon), tol.relative);
}

template <Scalar S>
bool bisector_coincidence_check(const Chain<S>& chain, std::size_t i, Tolerance tol) {
  const std::size_t n = chain.size();
  if (i >= n) throw GeometryError(ErrorKind::InvalidArgument, "vertex index out of range");
  const auto& k = chain.config.carrier_k.center;
  const auto& prev = chain.support[(i + n - 1) % n].center;
  const auto& here = chain.support[i].center;
  const auto& next = chain.support[(i + 1) % n].center;
  const Point<S> t = reflect_point(k, line_through(prev, here));
  const Point<S> u = reflect_point(k, line_through(here, next));
  return same_line(perpendicular_bisector(t, u), perpendicular_bisector(chain.q[i], chain.q[(i + 1) % n]), tol);
}

#define CHAINCONIC_INSTANTIATE_CONIC(S)                                                                        \
  template ConicKind classify(const Point<S>&, const GeneralizedCircle<S>&, const S&, Tolerance);              \
  template bool position_predicts_kind(const Point<S>&, const GeneralizedCircle<S>&, ConicKind);              \
  template FocalConic<S> conic_from_focus_tangent(const Point<S>&, const Point<S>&, const Line<S>&, Tolerance); \
  template InscribedConic<S> verify_inscribed_conic(const Point<S>&, const GeneralizedCircle<S>&,             \
                                                    const CenterPolygon<S>&, Tolerance);                      \
  template bool is_tangent(const FocalConic<S>&, const Line<S>&, Tolerance);                                  \
  template S brianchon_residual(const CenterPolygon<S>&);                                                     \
  template bool brianchon_check(const CenterPolygon<S>&, Tolerance);                                          \
  template bool bisector_coincidence_check(const Chain<S>&, std::size_t, Tolerance);

CHAINCONIC_INSTANTIATE_CONIC(Rational)
CHAINCONIC_INSTANTIATE_CONIC(double)

}  // namespace chainconic
