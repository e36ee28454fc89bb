#include <doctest.h>

#include <algorithm>
#include <array>

#include "chainconic/kernel.hpp"
#include "test_support.hpp"

using namespace chainconic;
using namespace chainconic::testing;

namespace {

LineQ line(std::int64_t a, std::int64_t b, std::int64_t c) { return {Q(a), Q(b), Q(c)}; }

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const GeometryError& e) {
    return e.kind();
  }
  FAIL("expected a GeometryError");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("perpendicular_bisector") {
  CHECK(same_line(perpendicular_bisector(pt(0, 0), pt(2, 0)), line(1, 0, -1)));
  CHECK(same_line(perpendicular_bisector(pt(-1, 2), pt(3, 2)), line(1, 0, -1)));
  CHECK(kind_of([] { perpendicular_bisector(pt(0, 0), pt(0, 0)); }) == ErrorKind::CoincidentPoints);
}

TEST_CASE("reflect_point") {
  CHECK(reflect_point(pt(0, 0), line(1, 0, -1)) == pt(2, 0));
  CHECK(reflect_point(pt(2, -5), line(0, 1, 5)) == pt(2, -5));
  // y = x - 1  <=>  x - y - 1 = 0
  CHECK(reflect_point(pt(0, 1), line(1, -1, -1)) == pt(2, -1));
}

TEST_CASE("circumcircle") {
  const auto c = circumcircle(pt(0, 0), pt(2, 0), pt(0, 2));
  CHECK(c.center == pt(1, 1));
  CHECK(c.radius_sq == Q(2));
  const auto unit = circumcircle(pt(1, 0), pt(0, 1), pt(-1, 0));
  CHECK(unit.center == pt(0, 0));
  CHECK(unit.radius_sq == Q(1));
  CHECK(kind_of([] { circumcircle(pt(0, 0), pt(1, 1), pt(2, 2)); }) == ErrorKind::CollinearPoints);
  CHECK(kind_of([] { circumcircle(pt(0, 0), pt(1, 1), pt(0, 0)); }) == ErrorKind::DuplicatePoints);
}

TEST_CASE("circumcircle float flags near-collinear input") {
  const Point<double> a{0.0, 0.0}, b{1.0, 1.0}, c{2.0, 2.0 + 1e-13};
  CHECK_THROWS_AS(circumcircle(a, b, c), GeometryError);
  const auto circle = circumcircle(Point<double>{0, 0}, Point<double>{2, 0}, Point<double>{0, 2});
  CHECK(circle.center.x == doctest::Approx(1.0));
  CHECK(circle.radius_sq == doctest::Approx(2.0));
}

TEST_CASE("second_intersection") {
  const GeneralizedCircle<Q> base = ProperCircle<Q>{pt(0, 0), Q(25)};
  CHECK(second_intersection(ProperCircle<Q>{pt(4, 0), Q(9)}, base, pt(4, 3)) == pt(4, -3));

  const GeneralizedCircle<Q> axis = StraightLine<Q>{line(0, 1, 0)};
  CHECK(second_intersection(ProperCircle<Q>{pt(1, 1), Q(2)}, axis, pt(0, 0)) == pt(2, 0));

  const GeneralizedCircle<Q> unit = ProperCircle<Q>{pt(0, 0), Q(1)};
  CHECK(kind_of([&] { second_intersection(ProperCircle<Q>{pt(2, 0), Q(1)}, unit, pt(1, 0)); }) ==
        ErrorKind::TangentContact);
  CHECK(kind_of([&] { second_intersection(ProperCircle<Q>{pt(2, 0), Q(1)}, unit, pt(0, 1)); }) ==
        ErrorKind::NotOnCurves);
  CHECK(kind_of([&] { second_intersection(ProperCircle<Q>{pt(0, 0), Q(1)}, unit, pt(1, 0)); }) ==
        ErrorKind::CoincidentCurves);
  // Tangent line.
  const GeneralizedCircle<Q> top = StraightLine<Q>{line(0, 1, -1)};
  CHECK(kind_of([&] { second_intersection(ProperCircle<Q>{pt(0, 0), Q(1)}, top, pt(0, 1)); }) ==
        ErrorKind::TangentContact);
}

TEST_CASE("concyclic4") {
  CHECK(concyclic4(pt(1, 0), pt(0, 1), pt(-1, 0), pt(0, -1)));
  CHECK_FALSE(concyclic4(pt(0, 0), pt(1, 0), pt(2, 0), pt(3, 1)));
  CHECK(concyclic4(pt(0, 0), pt(1, 0), pt(2, 0), pt(3, 0)));
  CHECK(concyclic_residual(pt(0, 0), pt(0, 0), pt(0, 0), pt(1, 1)) == Q(0));
  // oracle: det = -4, pairwise normalizer 26
  CHECK(concyclic_residual(pt(0, 0), pt(1, 0), pt(0, 1), pt(2, 2)) == Q(-2, 13));
}

TEST_CASE("concyclic residual is similarity invariant") {
  RandomRationals rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const std::array pts{rng.point(), rng.point(), rng.point(), rng.point()};
    const auto sim = Similarity::from(rng.rational(), rng.positive(), rng.rational(), rng.rational());
    CHECK(concyclic_residual(pts[0], pts[1], pts[2], pts[3]) ==
          concyclic_residual(sim(pts[0]), sim(pts[1]), sim(pts[2]), sim(pts[3])));
  }
}

TEST_CASE("param_point") {
  const auto unit = ProperCircle<Q>{pt(0, 0), Q(1)};
  CHECK(param_point(unit, Q(0), Q(1)) == pt(1, 0));
  CHECK(param_point(unit, Q(1), Q(1)) == pt(0, 1));
  CHECK(param_point(ProperCircle<Q>{pt(3, 0), Q(4)}, Q(1, 2), Q(2)) == Point<Q>{Q(21, 5), Q(8, 5)});
  CHECK(kind_of([&] { param_point(unit, Q(0), Q(2)); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([&] { param_point(unit, Q(0), Q(-1)); }) == ErrorKind::InvalidArgument);
  RandomRationals rng(5);
  for (int i = 0; i < 50; ++i) {
    const Q r = rng.positive();
    const ProperCircle<Q> c{rng.point(), r * r};
    CHECK(on_circle(param_point(c, rng.rational(), r), c));
  }
}

TEST_CASE("lines_concurrent") {
  CHECK(lines_concurrent(line(1, 0, 0), line(0, 1, 0), line(1, -1, 0)));
  CHECK_FALSE(lines_concurrent(line(1, 0, 0), line(1, 0, -1), line(0, 1, 0)));
  CHECK(lines_concurrent(line(1, 0, 0), line(1, 0, -1), line(1, 0, -2)));
  const Line<double> a{1, 0, 0}, b{0, 1, 0}, c{1, -1, 1e-12};
  CHECK(lines_concurrent(a, b, c));
  CHECK_FALSE(lines_concurrent(a, b, Line<double>{1, -1, 1e-3}));
}

TEST_CASE("line equality is projective") {
  CHECK(same_line(line(1, 2, 3), line(-2, -4, -6)));
  CHECK_FALSE(same_line(line(1, 2, 3), line(1, 2, 4)));
  CHECK(parallel(line(1, 2, 3), line(2, 4, 0)));
  CHECK(kind_of([] { LineQ::make(Q(0), Q(0), Q(1)); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { ProperCircle<Q>::make(pt(0, 0), Q(0)); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("kernel properties on random rationals") {
  RandomRationals rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = rng.point();
    const auto q = rng.point();
    const auto l = rng.line();
    CHECK(reflect_point(reflect_point(p, l), l) == p);
    if (p == q) continue;
    CHECK(reflect_point(p, perpendicular_bisector(p, q)) == q);
    const auto m = midpoint(p, reflect_point(p, l));
    CHECK(on_line(m, l));

    const auto r = rng.point();
    if (orientation(p, q, r).is_zero()) continue;
    const auto c = circumcircle(p, q, r);
    CHECK(squared_distance(c.center, p) == c.radius_sq);
    CHECK(squared_distance(c.center, q) == c.radius_sq);
    CHECK(squared_distance(c.center, r) == c.radius_sq);
  }
}
