#pragma once

#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "chainconic/chain.hpp"

namespace chainconic {

enum class ConicKind { Ellipse, Hyperbola, Parabola, Circle };

std::string_view to_string(ConicKind kind);

// Conic with foci K and L, described by the circle of radius r = 2a about L
// on which every reflection of K across a tangent lies.
template <Scalar S>
struct CentralConic {
  Point<S> focus_k;
  Point<S> focus_l;
  S r_sq{};
};

// Reflections of the focus across tangents lie on the directrix.
template <Scalar S>
struct FocalParabola {
  Point<S> focus;
  Line<S> directrix;
};

template <Scalar S>
struct FocalConic {
  ConicKind kind = ConicKind::Ellipse;
  std::variant<CentralConic<S>, FocalParabola<S>> shape;

  [[nodiscard]] bool is_parabola() const { return kind == ConicKind::Parabola; }
  [[nodiscard]] const CentralConic<S>& central() const { return std::get<CentralConic<S>>(shape); }
  [[nodiscard]] const FocalParabola<S>& parabola() const { return std::get<FocalParabola<S>>(shape); }
};

template <Scalar S>
struct TangencyCertificate {
  Line<S> side;
  Point<S> reflected_focus;
  // Squared distance from reflected_focus to L; empty for a parabola.
  std::optional<S> dist_sq_to_l;
};

template <Scalar S>
struct InscribedConic {
  FocalConic<S> conic;
  std::vector<TangencyCertificate<S>> certificates;
  // Ellipse/hyperbola: max |d_i² - d_1²| / d_1². Parabola: max distance of a
  // reflected focus from the directrix over the spread of reflected foci.
  double max_relative_spread = 0.0;
};

// Kind by comparing |KL|² with r²: Circle when K == L, Ellipse when smaller,
// Hyperbola when larger; Parabola for a straight carrier. Throws
// DegenerateConic when |KL|² == r² or r² == 0.
template <Scalar S>
ConicKind classify(const Point<S>& focus_k, const GeneralizedCircle<S>& carrier_l, const S& r_sq,
                   Tolerance tol = {});

// Whether the position of K relative to c(L) (strictly inside / strictly
// outside) predicts the kind (Ellipse or Circle / Hyperbola). This holds
// whenever c(K) lies inside c(L) or the two carriers are disjoint; it can fail
// when the carriers cross, because r depends on where the chain starts.
template <Scalar S>
bool position_predicts_kind(const Point<S>& focus_k, const GeneralizedCircle<S>& carrier_l, ConicKind kind);

// Throws FocusOnTangent or DegenerateConic.
template <Scalar S>
FocalConic<S> conic_from_focus_tangent(const Point<S>& focus_k, const Point<S>& focus_l, const Line<S>& tangent,
                                       Tolerance tol = {});

// Reflects K across every side of the polygon and checks the reflections sit
// on one circle about L (proper carrier) or on one line parallel to c(L)
// (straight carrier). Throws NotInscribed (1-based worst side, residual),
// FocusOnTangent or DegenerateConic.
template <Scalar S>
InscribedConic<S> verify_inscribed_conic(const Point<S>& focus_k, const GeneralizedCircle<S>& carrier_l,
                                         const CenterPolygon<S>& polygon, Tolerance tol = {});

// Tangency of the full line, not of a segment.
template <Scalar S>
bool is_tangent(const FocalConic<S>& conic, const Line<S>& line, Tolerance tol = {});

// concurrency_residual of O1O4, O2O5, O3O6 (float: scaled by the polygon
// diameter). Throws WrongArity or DegenerateDiagonal.
template <Scalar S>
S brianchon_residual(const CenterPolygon<S>& polygon);

template <Scalar S>
bool brianchon_check(const CenterPolygon<S>& polygon, Tolerance tol = {});

// The proof's pivot step at vertex O_i (0-based): with T, U the reflections of
// K across sides O_{i-1}O_i and O_iO_{i+1}, the bisector of TU is the
// bisector of Q_iQ_{i+1}. Throws CoincidentPoints when T == U or
// Q_i == Q_{i+1}.
template <Scalar S>
bool bisector_coincidence_check(const Chain<S>& chain, std::size_t i, Tolerance tol = {});

}  // namespace chainconic
