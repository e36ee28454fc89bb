#pragma once

#include <variant>

#include "chainconic/errors.hpp"
#include "chainconic/scalar.hpp"

namespace chainconic {

template <Scalar S>
struct Point {
  S x{};
  S y{};

  friend bool operator==(const Point&, const Point&) = default;
};

// a*x + b*y + c = 0 with (a, b) != (0, 0). Equality of lines is projective
// (proportional coefficients); use same_line, not operator==.
template <Scalar S>
struct Line {
  S a{};
  S b{};
  S c{};

  static Line make(S a, S b, S c);
  [[nodiscard]] S evaluate(const Point<S>& p) const { return a * p.x + b * p.y + c; }
};

// Stored by squared radius so rational inputs stay rational.
template <Scalar S>
struct ProperCircle {
  Point<S> center;
  S radius_sq{};

  static ProperCircle make(Point<S> center, S radius_sq);
};

template <Scalar S>
struct StraightLine {
  Line<S> line;
};

template <Scalar S>
using GeneralizedCircle = std::variant<ProperCircle<S>, StraightLine<S>>;

template <Scalar S>
S squared_distance(const Point<S>& p, const Point<S>& q);

template <Scalar S>
Point<S> midpoint(const Point<S>& p, const Point<S>& q);

// Twice the signed area of (p, q, r); positive when counter-clockwise.
template <Scalar S>
S orientation(const Point<S>& p, const Point<S>& q, const Point<S>& r);

// Throws CoincidentPoints when p == q.
template <Scalar S>
Line<S> line_through(const Point<S>& p, const Point<S>& q);

template <Scalar S>
Line<S> perpendicular_through(const Point<S>& p, const Line<S>& l);

// Locus equidistant from p and q. Throws CoincidentPoints when p == q.
template <Scalar S>
Line<S> perpendicular_bisector(const Point<S>& p, const Point<S>& q);

template <Scalar S>
Point<S> reflect_point(const Point<S>& p, const Line<S>& l);

// Throws DuplicatePoints or CollinearPoints.
template <Scalar S>
ProperCircle<S> circumcircle(const Point<S>& p, const Point<S>& q, const Point<S>& r, Tolerance tol = {});

// The common point of `through` and `base` other than `known`, obtained by
// mirroring `known` across the line of centres (or, for a straight base,
// across the perpendicular from the circle centre). Square-root free.
// Throws NotOnCurves if `known` is not on both curves, TangentContact if the
// mirror image is `known` itself, CoincidentCurves for identical circles.
template <Scalar S>
Point<S> second_intersection(const ProperCircle<S>& through, const GeneralizedCircle<S>& base,
                             const Point<S>& known, Tolerance tol = {});

// det[x y x²+y² 1] over the four points divided by
// |p1p2|²|p3p4|² + |p1p3|²|p2p4|² + |p1p4|²|p2p3|²; invariant under
// translation, rotation, scaling and (up to sign) argument permutation.
// Zero iff the points lie on a common circle or line.
template <Scalar S>
S concyclic_residual(const Point<S>& p1, const Point<S>& p2, const Point<S>& p3, const Point<S>& p4);

// Four collinear points count as concyclic (common generalized circle).
template <Scalar S>
bool concyclic4(const Point<S>& p1, const Point<S>& p2, const Point<S>& p3, const Point<S>& p4,
                Tolerance tol = {});

// center + radius * ((1 - t²) / (1 + t²), 2t / (1 + t²)). The caller supplies
// the radius with radius² == circle.radius_sq; throws InvalidArgument if not.
template <Scalar S>
Point<S> param_point(const ProperCircle<S>& circle, const S& t, const S& radius, Tolerance tol = {});

// Exact: the raw 3x3 coefficient determinant. Float: the determinant of the
// unit-normal rows divided by `scale` (a length characteristic of the scene).
template <Scalar S>
S concurrency_residual(const Line<S>& l1, const Line<S>& l2, const Line<S>& l3, double scale = 1.0);

// Three parallel lines share an ideal point and count as concurrent.
template <Scalar S>
bool lines_concurrent(const Line<S>& l1, const Line<S>& l2, const Line<S>& l3, Tolerance tol = {},
                      double scale = 1.0);

// Proportional coefficients (all 2x2 minors vanish).
template <Scalar S>
bool same_line(const Line<S>& l1, const Line<S>& l2, Tolerance tol = {});

template <Scalar S>
bool parallel(const Line<S>& l1, const Line<S>& l2, Tolerance tol = {});

// Float: distance to the line at most tol.relative * scale.
template <Scalar S>
bool on_line(const Point<S>& p, const Line<S>& l, Tolerance tol = {}, double scale = 1.0);

// Float: |d² - r²| <= tol.relative * r².
template <Scalar S>
bool on_circle(const Point<S>& p, const ProperCircle<S>& c, Tolerance tol = {});

// Float: distance at most tol.relative * scale.
template <Scalar S>
bool same_point(const Point<S>& p, const Point<S>& q, Tolerance tol = {}, double scale = 1.0);

template <Scalar To, Scalar From>
Point<To> convert(const Point<From>& p) {
  return {scalar_cast<To>(p.x), scalar_cast<To>(p.y)};
}

template <Scalar To, Scalar From>
Line<To> convert(const Line<From>& l) {
  return {scalar_cast<To>(l.a), scalar_cast<To>(l.b), scalar_cast<To>(l.c)};
}

template <Scalar To, Scalar From>
ProperCircle<To> convert(const ProperCircle<From>& c) {
  return {convert<To>(c.center), scalar_cast<To>(c.radius_sq)};
}

template <Scalar To, Scalar From>
GeneralizedCircle<To> convert(const GeneralizedCircle<From>& g) {
  return std::visit([](const auto& v) -> GeneralizedCircle<To> {
    using V = std::decay_t<decltype(v)>;
    if constexpr (std::same_as<V, ProperCircle<From>>) {
      return convert<To>(v);
    } else {
      return StraightLine<To>{convert<To>(v.line)};
    }
  }, g);
}

}  // namespace chainconic
