#pragma once

#include <optional>
#include <string>

#include "chainconic/conic.hpp"

namespace chainconic::cli {

inline constexpr double kViewSize = 1000.0;
inline constexpr double kViewMargin = 0.05;

// SVG 1.1 scene of a chain: support circles, carriers, the inscribed conic
// (when given), the centre polygon (when given), then the points. Fixed
// 1000x1000 viewBox; coordinates printed with three decimals; element ids are
// stable ("support-3", "P-1", "conic-branch-2", ...), so equal input gives
// byte-identical output.
std::string render_svg(const Chain<Rational>& chain, const std::optional<CenterPolygon<Rational>>& polygon,
                       const std::optional<FocalConic<Rational>>& conic);

}  // namespace chainconic::cli
