#include "chainconic/kernel.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace chainconic {

namespace {

template <Scalar S>
double norm2d(const S& a, const S& b) {
  return std::hypot(to_double(a), to_double(b));
}

template <Scalar S>
S det3(const S& a1, const S& b1, const S& c1, const S& a2, const S& b2, const S& c2, const S& a3,
       const S& b3, const S& c3) {
  return a1 * (b2 * c3 - b3 * c2) - b1 * (a2 * c3 - a3 * c2) + c1 * (a2 * b3 - a3 * b2);
}

}  // namespace

template <Scalar S>
Line<S> Line<S>::make(S a, S b, S c) {
  if (a == S(0) && b == S(0)) {
    throw GeometryError(ErrorKind::InvalidArgument, "line needs (a, b) != (0, 0)");
  }
  return Line{std::move(a), std::move(b), std::move(c)};
}

template <Scalar S>
ProperCircle<S> ProperCircle<S>::make(Point<S> center, S radius_sq) {
  if (!(S(0) < radius_sq)) {
    throw GeometryError(ErrorKind::InvalidArgument, "proper circle needs radius_sq > 0");
  }
  return ProperCircle{std::move(center), std::move(radius_sq)};
}

template <Scalar S>
S squared_distance(const Point<S>& p, const Point<S>& q) {
  const S dx = p.x - q.x;
  const S dy = p.y - q.y;
  return dx * dx + dy * dy;
}

template <Scalar S>
Point<S> midpoint(const Point<S>& p, const Point<S>& q) {
  return {(p.x + q.x) / S(2), (p.y + q.y) / S(2)};
}

template <Scalar S>
S orientation(const Point<S>& p, const Point<S>& q, const Point<S>& r) {
  return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
}

template <Scalar S>
Line<S> line_through(const Point<S>& p, const Point<S>& q) {
  if (p == q) throw GeometryError(ErrorKind::CoincidentPoints, "line through a single point");
  const S a = q.y - p.y;
  const S b = p.x - q.x;
  return {a, b, S(0) - (a * p.x + b * p.y)};
}

template <Scalar S>
Line<S> perpendicular_through(const Point<S>& p, const Line<S>& l) {
  // Direction of l is (-b, a); it is the normal of the perpendicular.
  const S a = S(0) - l.b;
  const S b = l.a;
  return {a, b, S(0) - (a * p.x + b * p.y)};
}

template <Scalar S>
Line<S> perpendicular_bisector(const Point<S>& p, const Point<S>& q) {
  if (p == q) throw GeometryError(ErrorKind::CoincidentPoints, "bisector of a single point");
  const S a = q.x - p.x;
  const S b = q.y - p.y;
  const S c = S(0) - (a * (p.x + q.x) + b * (p.y + q.y)) / S(2);
  return {a, b, c};
}

template <Scalar S>
Point<S> reflect_point(const Point<S>& p, const Line<S>& l) {
  const S k = S(2) * l.evaluate(p) / (l.a * l.a + l.b * l.b);
  return {p.x - k * l.a, p.y - k * l.b};
}

template <Scalar S>
ProperCircle<S> circumcircle(const Point<S>& p, const Point<S>& q, const Point<S>& r, Tolerance tol) {
  if (p == q || q == r || p == r) {
    throw GeometryError(ErrorKind::DuplicatePoints, "circumcircle of repeated points");
  }
  const S d = S(2) * orientation(p, q, r);
  double scale = 0.0;
  if constexpr (!ScalarTraits<S>::exact) {
    scale = std::max({squared_distance(p, q), squared_distance(q, r), squared_distance(p, r)});
  }
  if (negligible(d, 2.0 * tol.relative * scale)) {
    throw GeometryError(ErrorKind::CollinearPoints, "circumcircle of collinear points");
  }
  // Solve relative to p to keep magnitudes small.
  const S bx = q.x - p.x, by = q.y - p.y;
  const S cx = r.x - p.x, cy = r.y - p.y;
  const S b2 = bx * bx + by * by;
  const S c2 = cx * cx + cy * cy;
  const S ux = (cy * b2 - by * c2) / d;
  const S uy = (bx * c2 - cx * b2) / d;
  return {Point<S>{p.x + ux, p.y + uy}, ux * ux + uy * uy};
}

template <Scalar S>
bool on_line(const Point<S>& p, const Line<S>& l, Tolerance tol, double scale) {
  if constexpr (ScalarTraits<S>::exact) {
    return l.evaluate(p) == S(0);
  } else {
    return std::abs(l.evaluate(p)) <= tol.relative * scale * norm2d(l.a, l.b);
  }
}

template <Scalar S>
bool on_circle(const Point<S>& p, const ProperCircle<S>& c, Tolerance tol) {
  return negligible(squared_distance(p, c.center) - c.radius_sq, tol.relative * to_double(c.radius_sq));
}

template <Scalar S>
bool same_point(const Point<S>& p, const Point<S>& q, Tolerance tol, double scale) {
  if constexpr (ScalarTraits<S>::exact) {
    return p == q;
  } else {
    return std::sqrt(squared_distance(p, q)) <= tol.relative * scale;
  }
}

template <Scalar S>
Point<S> second_intersection(const ProperCircle<S>& through, const GeneralizedCircle<S>& base,
                             const Point<S>& known, Tolerance tol) {
  const Tolerance membership{tol.membership, tol.membership};
  const double scale = std::sqrt(to_double(through.radius_sq));
  if (!on_circle(known, through, membership)) {
    throw GeometryError(ErrorKind::NotOnCurves, "known point is not on the circle");
  }
  Line<S> mirror;
  if (const auto* circle = std::get_if<ProperCircle<S>>(&base)) {
    if (!on_circle(known, *circle, membership)) {
      throw GeometryError(ErrorKind::NotOnCurves, "known point is not on the base circle");
    }
    if (same_point(through.center, circle->center, tol, scale)) {
      // Concentric circles sharing a point are the same circle.
      throw GeometryError(ErrorKind::CoincidentCurves, "circles coincide");
    }
    mirror = line_through(through.center, circle->center);
  } else {
    const auto& line = std::get<StraightLine<S>>(base).line;
    if (!on_line(known, line, membership, scale)) {
      throw GeometryError(ErrorKind::NotOnCurves, "known point is not on the base line");
    }
    mirror = perpendicular_through(through.center, line);
  }
  Point<S> other = reflect_point(known, mirror);
  if (same_point(other, known, tol, scale)) {
    throw GeometryError(ErrorKind::TangentContact, "curves touch at the known point");
  }
  return other;
}

template <Scalar S>
S concyclic_residual(const Point<S>& p1, const Point<S>& p2, const Point<S>& p3, const Point<S>& p4) {
  // Translate p4 to the origin; the 4x4 determinant reduces to 3x3.
  auto row = [&](const Point<S>& p) {
    const S x = p.x - p4.x;
    const S y = p.y - p4.y;
    return std::array<S, 3>{x, y, x * x + y * y};
  };
  const auto r1 = row(p1), r2 = row(p2), r3 = row(p3);
  // det[x y w 1] with the fourth row (0 0 0 1) equals det3 of the rest.
  const S det = det3(r1[0], r1[1], r1[2], r2[0], r2[1], r2[2], r3[0], r3[1], r3[2]);
  const S denom = squared_distance(p1, p2) * squared_distance(p3, p4) +
                  squared_distance(p1, p3) * squared_distance(p2, p4) +
                  squared_distance(p1, p4) * squared_distance(p2, p3);
  if (denom == S(0)) return S(0);
  return det / denom;
}

template <Scalar S>
bool concyclic4(const Point<S>& p1, const Point<S>& p2, const Point<S>& p3, const Point<S>& p4,
                Tolerance tol) {
  return negligible(concyclic_residual(p1, p2, p3, p4), tol.relative);
}

template <Scalar S>
Point<S> param_point(const ProperCircle<S>& circle, const S& t, const S& radius, Tolerance tol) {
  if (!(S(0) < radius) ||
      !negligible(radius * radius - circle.radius_sq, tol.relative * to_double(circle.radius_sq))) {
    throw GeometryError(ErrorKind::InvalidArgument, "radius does not match circle.radius_sq");
  }
  const S t2 = t * t;
  const S denom = S(1) + t2;
  return {circle.center.x + radius * (S(1) - t2) / denom, circle.center.y + radius * S(2) * t / denom};
}

template <Scalar S>
S concurrency_residual(const Line<S>& l1, const Line<S>& l2, const Line<S>& l3, double scale) {
  if constexpr (ScalarTraits<S>::exact) {
    (void)scale;
    return det3(l1.a, l1.b, l1.c, l2.a, l2.b, l2.c, l3.a, l3.b, l3.c);
  } else {
    const double n1 = norm2d(l1.a, l1.b), n2 = norm2d(l2.a, l2.b), n3 = norm2d(l3.a, l3.b);
    return det3(l1.a / n1, l1.b / n1, l1.c / n1, l2.a / n2, l2.b / n2, l2.c / n2, l3.a / n3, l3.b / n3,
                l3.c / n3) /
           scale;
  }
}

template <Scalar S>
bool lines_concurrent(const Line<S>& l1, const Line<S>& l2, const Line<S>& l3, Tolerance tol, double scale) {
  return negligible(concurrency_residual(l1, l2, l3, scale), tol.relative);
}

template <Scalar S>
bool parallel(const Line<S>& l1, const Line<S>& l2, Tolerance tol) {
  const S minor = l1.a * l2.b - l2.a * l1.b;
  if constexpr (ScalarTraits<S>::exact) {
    return minor == S(0);
  } else {
    return std::abs(minor) <= tol.relative * norm2d(l1.a, l1.b) * norm2d(l2.a, l2.b);
  }
}

template <Scalar S>
bool same_line(const Line<S>& l1, const Line<S>& l2, Tolerance tol) {
  const S ab = l1.a * l2.b - l2.a * l1.b;
  const S ac = l1.a * l2.c - l2.a * l1.c;
  const S bc = l1.b * l2.c - l2.b * l1.c;
  if constexpr (ScalarTraits<S>::exact) {
    return ab == S(0) && ac == S(0) && bc == S(0);
  } else {
    const double n1 = std::hypot(l1.a, l1.b, l1.c);
    const double n2 = std::hypot(l2.a, l2.b, l2.c);
    const double bound = tol.relative * n1 * n2;
    return std::abs(ab) <= bound && std::abs(ac) <= bound && std::abs(bc) <= bound;
  }
}

#define CHAINCONIC_INSTANTIATE_KERNEL(S)                                                                     \
  template struct Line<S>;                                                                                   \
  template struct ProperCircle<S>;                                                                           \
  template S squared_distance(const Point<S>&, const Point<S>&);                                             \
  template Point<S> midpoint(const Point<S>&, const Point<S>&);                                              \
  template S orientation(const Point<S>&, const Point<S>&, const Point<S>&);                                 \
  template Line<S> line_through(const Point<S>&, const Point<S>&);                                           \
  template Line<S> perpendicular_through(const Point<S>&, const Line<S>&);                                   \
  template Line<S> perpendicular_bisector(const Point<S>&, const Point<S>&);                                 \
  template Point<S> reflect_point(const Point<S>&, const Line<S>&);                                          \
  template ProperCircle<S> circumcircle(const Point<S>&, const Point<S>&, const Point<S>&, Tolerance);       \
  template Point<S> second_intersection(const ProperCircle<S>&, const GeneralizedCircle<S>&, const Point<S>&, \
                                        Tolerance);                                                          \
  template S concyclic_residual(const Point<S>&, const Point<S>&, const Point<S>&, const Point<S>&);         \
  template bool concyclic4(const Point<S>&, const Point<S>&, const Point<S>&, const Point<S>&, Tolerance);   \
  template Point<S> param_point(const ProperCircle<S>&, const S&, const S&, Tolerance);                      \
  template S concurrency_residual(const Line<S>&, const Line<S>&, const Line<S>&, double);                   \
  template bool lines_concurrent(const Line<S>&, const Line<S>&, const Line<S>&, Tolerance, double);         \
  template bool same_line(const Line<S>&, const Line<S>&, Tolerance);                                        \
  template bool parallel(const Line<S>&, const Line<S>&, Tolerance);                                         \
  template bool on_line(const Point<S>&, const Line<S>&, Tolerance, double);                                 \
  template bool on_circle(const Point<S>&, const ProperCircle<S>&, Tolerance);                               \
  template bool same_point(const Point<S>&, const Point<S>&, Tolerance, double);

CHAINCONIC_INSTANTIATE_KERNEL(Rational)
CHAINCONIC_INSTANTIATE_KERNEL(double)

}  // namespace chainconic
