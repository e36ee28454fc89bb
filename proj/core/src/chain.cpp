#include "chainconic/chain.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

namespace chainconic {

namespace {

GeometryError step_error(std::size_t index, const GeometryError& cause) {
  return GeometryError(ErrorKind::DegenerateStep,
                       "step " + std::to_string(index) + ": " + cause.what(), index, cause.kind());
}

template <Scalar S>
bool on_carrier(const Point<S>& p, const Carrier<S>& carrier, Tolerance tol, double scale) {
  const Tolerance membership{tol.membership, tol.membership};
  if (const auto* circle = std::get_if<RadiusCircle<S>>(&carrier)) {
    return on_circle(p, circle->circle(), membership);
  }
  return on_line(p, std::get<StraightLine<S>>(carrier).line, membership, scale);
}

}  // namespace

template <Scalar S>
Line<S> CenterPolygon<S>::side(std::size_t i) const {
  return line_through(vertices[i % vertices.size()], vertices[(i + 1) % vertices.size()]);
}

template <Scalar S>
GeneralizedCircle<S> as_generalized(const Carrier<S>& carrier) {
  if (const auto* circle = std::get_if<RadiusCircle<S>>(&carrier)) return circle->circle();
  return std::get<StraightLine<S>>(carrier);
}

template <Scalar S>
Point<S> carrier_point(const Carrier<S>& carrier, const S& t) {
  if (const auto* circle = std::get_if<RadiusCircle<S>>(&carrier)) {
    return param_point(circle->circle(), t, circle->radius);
  }
  const auto& l = std::get<StraightLine<S>>(carrier).line;
  const S k = S(0) - l.c / (l.a * l.a + l.b * l.b);
  return {k * l.a - t * l.b, k * l.b + t * l.a};
}

template <Scalar S>
double scene_scale(const ChainConfiguration<S>& config) {
  const auto& k = config.carrier_k;
  double scale = std::max(std::abs(to_double(k.center.x)), std::abs(to_double(k.center.y))) +
                 std::abs(to_double(k.radius));
  if (const auto* circle = std::get_if<RadiusCircle<S>>(&config.carrier_l)) {
    scale = std::max(scale, std::max(std::abs(to_double(circle->center.x)), std::abs(to_double(circle->center.y))) +
                                std::abs(to_double(circle->radius)));
  } else {
    const auto& l = std::get<StraightLine<S>>(config.carrier_l).line;
    scale = std::max(scale, std::abs(to_double(l.c)) / std::hypot(to_double(l.a), to_double(l.b)) +
                                2.0 * std::abs(to_double(k.radius)));
  }
  return scale > 0.0 ? scale : 1.0;
}

template <Scalar S>
void ChainConfiguration<S>::validate(Tolerance tol) const {
  auto fail = [](const std::string& why) { throw GeometryError(ErrorKind::InvalidConfiguration, why); };
  if (n < 3) fail("chain length must exceed 2, got " + std::to_string(n));
  if (p_params.size() != n) fail("expected " + std::to_string(n) + " P parameters");
  if (!(S(0) < carrier_k.radius)) fail("carrier K radius must be positive");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (p_params[i] == p_params[j]) {
        fail("P parameters " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " coincide");
      }
    }
  }
  if (const auto* circle = std::get_if<RadiusCircle<S>>(&carrier_l)) {
    if (!(S(0) < circle->radius)) fail("carrier L radius must be positive");
    if (circle->center == carrier_k.center && circle->radius == carrier_k.radius) {
      fail("carriers K and L are the same circle");
    }
  } else {
    const auto& l = std::get<StraightLine<S>>(carrier_l).line;
    if (l.a == S(0) && l.b == S(0)) fail("carrier L line needs (a, b) != (0, 0)");
  }
  if (const auto* start = std::get_if<Point<S>>(&q_start)) {
    if (!on_carrier(*start, carrier_l, tol, scene_scale(*this))) fail("Q_1 is not on carrier L");
  }
}

ChainConfiguration<double> to_float(const ChainConfiguration<Rational>& config) {
  ChainConfiguration<double> out;
  out.carrier_k = {convert<double>(config.carrier_k.center), config.carrier_k.radius.to_double()};
  if (const auto* circle = std::get_if<RadiusCircle<Rational>>(&config.carrier_l)) {
    out.carrier_l = RadiusCircle<double>{convert<double>(circle->center), circle->radius.to_double()};
  } else {
    out.carrier_l = StraightLine<double>{convert<double>(std::get<StraightLine<Rational>>(config.carrier_l).line)};
  }
  out.n = config.n;
  for (const auto& t : config.p_params) out.p_params.push_back(t.to_double());
  if (const auto* t = std::get_if<Rational>(&config.q_start)) {
    out.q_start = t->to_double();
  } else {
    out.q_start = convert<double>(std::get<Point<Rational>>(config.q_start));
  }
  return out;
}

template <Scalar S>
Chain<S> propagate(const ChainConfiguration<S>& config, Tolerance tol) {
  config.validate(tol);
  const std::size_t n = config.n;
  const double scale = scene_scale(config);
  const auto base = as_generalized(config.carrier_l);
  const auto carrier_k = config.carrier_k.circle();

  Chain<S> chain;
  chain.config = config;
  chain.p.reserve(n);
  for (const auto& t : config.p_params) {
    chain.p.push_back(param_point(carrier_k, t, config.carrier_k.radius));
  }

  // Q_i belongs to quadruples i-1 and i, so it must avoid P_{i-1}, P_i, P_{i+1}.
  auto check_q = [&](std::size_t i) {
    const auto& qi = chain.q[i];
    for (std::size_t j : {i + n - 1, i, i + 1}) {
      if (same_point(qi, chain.p[j % n], tol, scale)) {
        throw GeometryError(ErrorKind::DuplicateChainPoint,
                            "Q_" + std::to_string(i + 1) + " coincides with P_" + std::to_string(j % n + 1),
                            i + 1);
      }
    }
  };

  if (const auto* t = std::get_if<S>(&config.q_start)) {
    chain.q.push_back(carrier_point(config.carrier_l, *t));
  } else {
    chain.q.push_back(std::get<Point<S>>(config.q_start));
  }
  check_q(0);

  chain.support.reserve(n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    try {
      chain.support.push_back(circumcircle(chain.p[i], chain.q[i], chain.p[i + 1], tol));
      chain.q.push_back(second_intersection(chain.support.back(), base, chain.q[i], tol));
    } catch (const GeometryError& e) {
      throw step_error(i + 1, e);
    }
    check_q(i + 1);
  }
  try {
    chain.support.push_back(circumcircle(chain.p[n - 1], chain.q[n - 1], chain.q[0], tol));
  } catch (const GeometryError& e) {
    throw step_error(n, e);
  }
  return chain;
}

template <Scalar S>
S closure_residual(const Chain<S>& chain) {
  const std::size_t n = chain.size();
  return concyclic_residual(chain.p[n - 1], chain.q[n - 1], chain.q[0], chain.p[0]);
}

template <Scalar S>
bool verify_closure(const Chain<S>& chain, Tolerance tol) {
  return negligible(closure_residual(chain), tol.relative);
}

template <Scalar S>
CenterPolygon<S> center_polygon(const Chain<S>& chain, Tolerance tol) {
  if (!verify_closure(chain, tol)) {
    throw GeometryError(ErrorKind::NotClosed, "closing quadruple P_n Q_n Q_1 P_1 is not cyclic", std::nullopt,
                        std::nullopt, to_double(closure_residual(chain)));
  }
  const std::size_t n = chain.size();
  const double scale = scene_scale(chain.config);
  CenterPolygon<S> polygon;
  polygon.vertices.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& quad = std::array{chain.p[i], chain.q[i], chain.q[(i + 1) % n], chain.p[(i + 1) % n]};
    // A fully collinear quadruple would put O_i at infinity.
    if (negligible(orientation(quad[0], quad[1], quad[2]), tol.relative * scale * scale) &&
        negligible(orientation(quad[0], quad[1], quad[3]), tol.relative * scale * scale)) {
      throw GeometryError(ErrorKind::DegenerateCenter, "quadruple " + std::to_string(i + 1) + " is collinear",
                          i + 1);
    }
    polygon.vertices.push_back(chain.support[i].center);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (same_point(polygon.vertices[i], polygon.vertices[(i + 1) % n], tol, scale)) {
      throw GeometryError(ErrorKind::DegenerateCenter,
                          "centres O_" + std::to_string(i + 1) + " and O_" + std::to_string((i + 1) % n + 1) +
                              " coincide; side is undefined",
                          i + 1);
    }
  }
  return polygon;
}

#define CHAINCONIC_INSTANTIATE_CHAIN(S)                                                   \
  template struct ChainConfiguration<S>;                                                  \
  template struct CenterPolygon<S>;                                                       \
  template GeneralizedCircle<S> as_generalized(const Carrier<S>&);                        \
  template Point<S> carrier_point(const Carrier<S>&, const S&);                           \
  template double scene_scale(const ChainConfiguration<S>&);                              \
  template Chain<S> propagate(const ChainConfiguration<S>&, Tolerance);                   \
  template S closure_residual(const Chain<S>&);                                           \
  template bool verify_closure(const Chain<S>&, Tolerance);                               \
  template CenterPolygon<S> center_polygon(const Chain<S>&, Tolerance);

CHAINCONIC_INSTANTIATE_CHAIN(Rational)
CHAINCONIC_INSTANTIATE_CHAIN(double)

}  // namespace chainconic
