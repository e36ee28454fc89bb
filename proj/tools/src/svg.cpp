#include "chainconic/cli/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <vector>

namespace chainconic::cli {

namespace {

struct Vec {
  double x = 0.0;
  double y = 0.0;
};

Vec operator+(Vec a, Vec b) { return {a.x + b.x, a.y + b.y}; }
Vec operator-(Vec a, Vec b) { return {a.x - b.x, a.y - b.y}; }
Vec operator*(double s, Vec a) { return {s * a.x, s * a.y}; }
double norm(Vec a) { return std::hypot(a.x, a.y); }

Vec to_vec(const Point<Rational>& p) { return {p.x.to_double(), p.y.to_double()}; }

std::string num(double v) {
  std::array<char, 32> buf{};
  std::snprintf(buf.data(), buf.size(), "%.3f", v == 0.0 ? 0.0 : v);
  std::string s(buf.data());
  return s == "-0.000" ? "0.000" : s;
}

// Model -> view transform: square window around the scene, y pointing up.
class Viewport {
 public:
  explicit Viewport(const std::vector<Vec>& extent) {
    double lo_x = extent.front().x, hi_x = lo_x, lo_y = extent.front().y, hi_y = lo_y;
    for (const auto& p : extent) {
      lo_x = std::min(lo_x, p.x);
      hi_x = std::max(hi_x, p.x);
      lo_y = std::min(lo_y, p.y);
      hi_y = std::max(hi_y, p.y);
    }
    center_ = {(lo_x + hi_x) / 2.0, (lo_y + hi_y) / 2.0};
    const double side = std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
    scale_ = kViewSize * (1.0 - 2.0 * kViewMargin) / side;
  }

  [[nodiscard]] Vec map(Vec p) const {
    return {kViewSize / 2.0 + scale_ * (p.x - center_.x), kViewSize / 2.0 - scale_ * (p.y - center_.y)};
  }
  [[nodiscard]] double length(double d) const { return scale_ * d; }
  // Model-space radius that covers the whole view from `from`.
  [[nodiscard]] double reach(Vec from) const { return norm(from - center_) + kViewSize / scale_; }

 private:
  Vec center_;
  double scale_ = 1.0;
};

bool inside_clip(Vec v) {
  constexpr double pad = 0.1 * kViewSize;
  return v.x >= -pad && v.x <= kViewSize + pad && v.y >= -pad && v.y <= kViewSize + pad;
}

// Polyline in view space, split wherever it leaves the padded view box.
std::string path_data(const std::vector<Vec>& view_points, bool closed) {
  std::ostringstream d;
  bool pen_down = false;
  for (const auto& v : view_points) {
    if (!inside_clip(v)) {
      pen_down = false;
      continue;
    }
    d << (pen_down ? " L" : (d.tellp() > 0 ? " M" : "M")) << num(v.x) << "," << num(v.y);
    pen_down = true;
  }
  if (closed && pen_down) d << " Z";
  return d.str();
}

// Segment of an infinite line inside the view box, or nothing.
std::optional<std::pair<Vec, Vec>> clip_line(const Viewport& view, const Line<Rational>& line) {
  const double a = line.a.to_double(), b = line.b.to_double(), c = line.c.to_double();
  const double n2 = a * a + b * b;
  const Vec foot{-a * c / n2, -b * c / n2};
  const Vec dir = (1.0 / std::sqrt(n2)) * Vec{-b, a};
  const double reach = view.reach(foot);
  const Vec p0 = view.map(foot - reach * dir);
  const Vec p1 = view.map(foot + reach * dir);
  // Liang-Barsky against [0, size]^2.
  double t0 = 0.0, t1 = 1.0;
  const double dx = p1.x - p0.x, dy = p1.y - p0.y;
  const std::array<double, 4> p{-dx, dx, -dy, dy};
  const std::array<double, 4> q{p0.x, kViewSize - p0.x, p0.y, kViewSize - p0.y};
  for (std::size_t i = 0; i < 4; ++i) {
    if (p[i] == 0.0) {
      if (q[i] < 0.0) return std::nullopt;
      continue;
    }
    const double r = q[i] / p[i];
    if (p[i] < 0.0) {
      t0 = std::max(t0, r);
    } else {
      t1 = std::min(t1, r);
    }
  }
  if (t0 > t1) return std::nullopt;
  return std::pair{Vec{p0.x + t0 * dx, p0.y + t0 * dy}, Vec{p0.x + t1 * dx, p0.y + t1 * dy}};
}

constexpr int kSamples = 720;

std::vector<std::vector<Vec>> conic_paths(const Viewport& view, const FocalConic<Rational>& conic) {
  if (conic.is_parabola()) {
    const auto& parabola = conic.parabola();
    const Vec focus = to_vec(parabola.focus);
    const auto& d = parabola.directrix;
    const double a = d.a.to_double(), b = d.b.to_double(), c = d.c.to_double();
    const double n2 = a * a + b * b;
    const double offset = (a * focus.x + b * focus.y + c) / n2;
    const Vec foot = focus - offset * Vec{a, b};
    const Vec vertex = 0.5 * (focus + foot);
    const double p = norm(focus - foot) / 2.0;
    const Vec normal = (1.0 / (2.0 * p)) * (focus - foot);
    const Vec along{-normal.y, normal.x};
    const double reach = view.reach(vertex);
    const double s_max = std::max(reach, 2.0 * std::sqrt(p * reach));
    std::vector<Vec> pts;
    for (int i = 0; i <= kSamples; ++i) {
      const double s = -s_max + 2.0 * s_max * i / kSamples;
      pts.push_back(view.map(vertex + s * along + (s * s / (4.0 * p)) * normal));
    }
    return {pts};
  }

  const auto& central = conic.central();
  const Vec k = to_vec(central.focus_k), l = to_vec(central.focus_l);
  const Vec center = 0.5 * (k + l);
  const double focal = norm(l - k) / 2.0;
  const double major = std::sqrt(central.r_sq.to_double()) / 2.0;
  const Vec u = focal > 0.0 ? (1.0 / (2.0 * focal)) * (l - k) : Vec{1.0, 0.0};
  const Vec v{-u.y, u.x};

  if (conic.kind == ConicKind::Hyperbola) {
    const double minor = std::sqrt(focal * focal - major * major);
    const double s_max = std::asinh(view.reach(center) / std::min(minor, major)) + 0.5;
    std::vector<std::vector<Vec>> branches(2);
    for (int side = 0; side < 2; ++side) {
      const double sign = side == 0 ? 1.0 : -1.0;
      for (int i = 0; i <= kSamples; ++i) {
        const double s = -s_max + 2.0 * s_max * i / kSamples;
        branches[side].push_back(view.map(center + (sign * major * std::cosh(s)) * u + (minor * std::sinh(s)) * v));
      }
    }
    return branches;
  }

  const double minor = std::sqrt(std::max(major * major - focal * focal, 0.0));
  std::vector<Vec> pts;
  for (int i = 0; i < kSamples; ++i) {
    const double t = 2.0 * std::numbers::pi * i / kSamples;
    pts.push_back(view.map(center + (major * std::cos(t)) * u + (minor * std::sin(t)) * v));
  }
  return {pts};
}

}  // namespace

std::string render_svg(const Chain<Rational>& chain, const std::optional<CenterPolygon<Rational>>& polygon,
                       const std::optional<FocalConic<Rational>>& conic) {
  const auto& config = chain.config;
  std::vector<Vec> extent;
  const Vec k = to_vec(config.carrier_k.center);
  const double r_k = config.carrier_k.radius.to_double();
  extent.insert(extent.end(), {k - Vec{r_k, r_k}, k + Vec{r_k, r_k}});
  if (const auto* circle = std::get_if<RadiusCircle<Rational>>(&config.carrier_l)) {
    const Vec l = to_vec(circle->center);
    const double r = circle->radius.to_double();
    extent.insert(extent.end(), {l - Vec{r, r}, l + Vec{r, r}});
  }
  for (const auto& p : chain.p) extent.push_back(to_vec(p));
  for (const auto& q : chain.q) extent.push_back(to_vec(q));
  if (polygon) {
    for (const auto& o : polygon->vertices) extent.push_back(to_vec(o));
  }
  const Viewport view(extent);

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"1000\" height=\"1000\" "
         "viewBox=\"0 0 1000 1000\">\n"
      << "  <rect id=\"background\" x=\"0\" y=\"0\" width=\"1000\" height=\"1000\" fill=\"#ffffff\"/>\n";

  auto circle = [&](const std::string& id, Vec c, double r, const char* style) {
    const Vec m = view.map(c);
    svg << "    <circle id=\"" << id << "\" cx=\"" << num(m.x) << "\" cy=\"" << num(m.y) << "\" r=\""
        << num(view.length(r)) << "\" " << style << "/>\n";
  };
  auto line = [&](const std::string& id, const Line<Rational>& l, const char* style) {
    if (const auto seg = clip_line(view, l)) {
      svg << "    <line id=\"" << id << "\" x1=\"" << num(seg->first.x) << "\" y1=\"" << num(seg->first.y)
          << "\" x2=\"" << num(seg->second.x) << "\" y2=\"" << num(seg->second.y) << "\" " << style << "/>\n";
    }
  };

  svg << "  <g id=\"supports\">\n";
  for (std::size_t i = 0; i < chain.support.size(); ++i) {
    circle("support-" + std::to_string(i + 1), to_vec(chain.support[i].center),
           std::sqrt(chain.support[i].radius_sq.to_double()), "fill=\"none\" stroke=\"#9e9e9e\" stroke-width=\"1\"");
  }
  svg << "  </g>\n";

  svg << "  <g id=\"carriers\">\n";
  circle("carrier-K", k, r_k, "fill=\"none\" stroke=\"#1565c0\" stroke-width=\"2\"");
  if (const auto* c = std::get_if<RadiusCircle<Rational>>(&config.carrier_l)) {
    circle("carrier-L", to_vec(c->center), c->radius.to_double(), "fill=\"none\" stroke=\"#2e7d32\" stroke-width=\"2\"");
  } else {
    line("carrier-L", std::get<StraightLine<Rational>>(config.carrier_l).line,
         "stroke=\"#2e7d32\" stroke-width=\"2\"");
  }
  svg << "  </g>\n";

  if (conic) {
    svg << "  <g id=\"conic\" data-kind=\"" << to_string(conic->kind) << "\">\n";
    const auto paths = conic_paths(view, *conic);
    const bool closed = conic->kind == ConicKind::Ellipse || conic->kind == ConicKind::Circle;
    for (std::size_t i = 0; i < paths.size(); ++i) {
      const auto d = path_data(paths[i], closed);
      if (d.empty()) continue;
      svg << "    <path id=\"conic-branch-" << i + 1 << "\" d=\"" << d
          << "\" fill=\"none\" stroke=\"#c62828\" stroke-width=\"2\"/>\n";
    }
    if (conic->is_parabola()) {
      line("directrix", conic->parabola().directrix, "stroke=\"#c62828\" stroke-width=\"1\" stroke-dasharray=\"6,4\"");
    }
    svg << "  </g>\n";
  }

  if (polygon) {
    svg << "  <g id=\"polygon\">\n    <polygon id=\"center-polygon\" points=\"";
    for (std::size_t i = 0; i < polygon->size(); ++i) {
      const Vec m = view.map(to_vec(polygon->vertices[i]));
      svg << (i == 0 ? "" : " ") << num(m.x) << "," << num(m.y);
    }
    svg << "\" fill=\"none\" stroke=\"#6a1b9a\" stroke-width=\"2\"/>\n  </g>\n";
  }

  svg << "  <g id=\"points\">\n";
  const char* dot_p = "fill=\"#1565c0\"";
  const char* dot_q = "fill=\"#2e7d32\"";
  const char* dot_o = "fill=\"#6a1b9a\"";
  const double dot = 4.0 / view.length(1.0);
  for (std::size_t i = 0; i < chain.p.size(); ++i) circle("P-" + std::to_string(i + 1), to_vec(chain.p[i]), dot, dot_p);
  for (std::size_t i = 0; i < chain.q.size(); ++i) circle("Q-" + std::to_string(i + 1), to_vec(chain.q[i]), dot, dot_q);
  if (polygon) {
    for (std::size_t i = 0; i < polygon->size(); ++i) {
      circle("O-" + std::to_string(i + 1), to_vec(polygon->vertices[i]), dot, dot_o);
    }
  }
  circle("focus-K", k, dot, "fill=\"#000000\"");
  if (const auto* c = std::get_if<RadiusCircle<Rational>>(&config.carrier_l)) {
    circle("focus-L", to_vec(c->center), dot, "fill=\"#000000\"");
  }
  svg << "  </g>\n</svg>\n";
  return svg.str();
}

}  // namespace chainconic::cli
