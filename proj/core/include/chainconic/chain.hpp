#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "chainconic/kernel.hpp"

namespace chainconic {

// A proper circle that also carries its radius, so that rational
// parametrisation keeps points exactly on it.
template <Scalar S>
struct RadiusCircle {
  Point<S> center;
  S radius{};

  [[nodiscard]] ProperCircle<S> circle() const { return {center, radius * radius}; }
};

template <Scalar S>
using Carrier = std::variant<RadiusCircle<S>, StraightLine<S>>;

// Q_1 given either as a carrier parameter or as an explicit point on c(L).
template <Scalar S>
using ChainStart = std::variant<S, Point<S>>;

template <Scalar S>
struct ChainConfiguration {
  RadiusCircle<S> carrier_k;
  Carrier<S> carrier_l;
  std::size_t n = 0;
  std::vector<S> p_params;
  ChainStart<S> q_start;

  // Throws InvalidConfiguration: n < 3, wrong parameter count, repeated
  // parameters, non-positive radius, identical carriers, Q_1 off c(L).
  void validate(Tolerance tol = {}) const;

  [[nodiscard]] bool carrier_l_is_line() const { return std::holds_alternative<StraightLine<S>>(carrier_l); }
};

template <Scalar S>
struct Chain {
  ChainConfiguration<S> config;
  std::vector<Point<S>> p;
  std::vector<Point<S>> q;
  // support[i] passes through p[i], q[i], p[i+1] and q[i+1] (cyclic); the
  // last one is built from p[n-1], q[n-1], q[0], and whether it also passes
  // through p[0] is the closure property.
  std::vector<ProperCircle<S>> support;

  [[nodiscard]] std::size_t size() const { return p.size(); }
};

template <Scalar S>
struct CenterPolygon {
  std::vector<Point<S>> vertices;

  [[nodiscard]] std::size_t size() const { return vertices.size(); }
  // Line through vertex i and vertex i+1 (cyclic, 0-based).
  [[nodiscard]] Line<S> side(std::size_t i) const;
};

template <Scalar S>
GeneralizedCircle<S> as_generalized(const Carrier<S>& carrier);

// Rational point on a carrier: the stereographic parametrisation for a
// circle, foot-of-origin + t * direction for a line.
template <Scalar S>
Point<S> carrier_point(const Carrier<S>& carrier, const S& t);

// Bounding length of the carriers; float predicates measure against it.
template <Scalar S>
double scene_scale(const ChainConfiguration<S>& config);

ChainConfiguration<double> to_float(const ChainConfiguration<Rational>& config);

// Support circle i from P_i, Q_i, P_{i+1}; Q_{i+1} is its second point on
// c(L). Throws DegenerateStep (1-based index, wrapped cause) or
// DuplicateChainPoint.
template <Scalar S>
Chain<S> propagate(const ChainConfiguration<S>& config, Tolerance tol = {});

// Normalised concyclicity residual of (P_n, Q_n, Q_1, P_1).
template <Scalar S>
S closure_residual(const Chain<S>& chain);

template <Scalar S>
bool verify_closure(const Chain<S>& chain, Tolerance tol = {});

// Throws NotClosed or DegenerateCenter.
template <Scalar S>
CenterPolygon<S> center_polygon(const Chain<S>& chain, Tolerance tol = {});

}  // namespace chainconic
