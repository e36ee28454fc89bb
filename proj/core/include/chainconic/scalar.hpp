#pragma once

#include <cmath>
#include <concepts>
#include <string_view>

#include "chainconic/rational.hpp"

namespace chainconic {

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static constexpr std::string_view backend = "exact";
  static double to_double(const Rational& v) { return v.to_double(); }
};

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static constexpr std::string_view backend = "float";
  static double to_double(double v) { return v; }
};

// An ordered field with one of the two supported realizations.
template <class S>
concept Scalar = requires(const S& a, const S& b) {
  { ScalarTraits<S>::exact } -> std::convertible_to<bool>;
  { a + b } -> std::convertible_to<S>;
  { a - b } -> std::convertible_to<S>;
  { a * b } -> std::convertible_to<S>;
  { a / b } -> std::convertible_to<S>;
  { a < b } -> std::convertible_to<bool>;
};

inline constexpr double kDefaultTolerance = 1e-9;

// Tolerances only apply to the float realization; the exact realization tests
// equalities exactly and ignores both fields.
//   relative   - verification predicates (closure, tangency, concurrency)
//   membership - preconditions such as "known point lies on both curves",
//                which see accumulated error along a chain
struct Tolerance {
  double relative = kDefaultTolerance;
  double membership = 1e-7;
};

template <Scalar S>
double to_double(const S& v) {
  return ScalarTraits<S>::to_double(v);
}

template <Scalar S>
S abs_value(const S& v) {
  return v < S(0) ? S(0) - v : v;
}

// Exact: v == 0. Float: |v| <= bound.
template <Scalar S>
bool negligible(const S& v, double bound) {
  if constexpr (ScalarTraits<S>::exact) {
    return v == S(0);
  } else {
    return std::abs(v) <= bound;
  }
}

template <Scalar To, Scalar From>
To scalar_cast(const From& v) {
  if constexpr (std::same_as<To, From>) {
    return v;
  } else if constexpr (std::same_as<To, double>) {
    return to_double(v);
  } else {
    return Rational::from_double(to_double(v));
  }
}

}  // namespace chainconic
