#include "chainconic/generator.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <limits>
#include <random>
#include <string>

#include "chainconic/conic.hpp"

namespace chainconic {

namespace {

constexpr std::array<std::string_view, 3> kScenarioNames{"fig2-ellipse", "fig3-parabola", "hyperbola"};

// Fraction of the carrier diameter that must separate c(K) from c(L) (or
// from the centre, for k-inside).
constexpr double kCarrierClearance = 0.05;
constexpr int kParamRedraws = 64;

std::uint64_t profile_tag(CarrierSeparation separation) {
  switch (separation) {
    case CarrierSeparation::KInsideL: return 0x6b2d696e73696465ULL;
    case CarrierSeparation::KOutsideL: return 0x6b2d6f7574736964ULL;
    case CarrierSeparation::LIsLine: return 0x6c2d6c696e650000ULL;
  }
  return 0;
}

// Uniform integer in [lo, hi] by rejection; unlike std::uniform_int_distribution
// the sequence is fixed across standard libraries.
class GridSampler {
 public:
  GridSampler(std::uint64_t stream, std::int64_t bound) : engine_(stream), bound_(bound) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1u;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t draw = 0;
    do {
      draw = engine_();
    } while (draw >= limit);
    return lo + static_cast<std::int64_t>(draw % span);
  }

  // p/q with |p|, |q| <= bound, q > 0.
  Rational grid() { return Rational(integer(-bound_, bound_), integer(1, bound_)); }

  // p/q in (0, bound].
  Rational positive() { return Rational(integer(1, bound_), integer(1, bound_)); }

 private:
  std::mt19937_64 engine_;
  std::int64_t bound_;
};

double distance(const Point<Rational>& a, const Point<Rational>& b) {
  return std::sqrt(squared_distance(a, b).to_double());
}

double turn_fraction(const Rational& t) { return 2.0 * std::atan(t.to_double()) / (2.0 * std::numbers::pi); }

double circular_gap(double a, double b) {
  const double d = std::abs(a - b);
  return std::min(d, 1.0 - d);
}

struct Rejected {};

ChainConfiguration<Rational> draw_configuration(std::size_t n, const GeneratorProfile& profile, GridSampler& rng) {
  ChainConfiguration<Rational> config;
  config.n = n;
  const Rational r_k = rng.positive();
  const Point<Rational> k{rng.grid(), rng.grid()};
  config.carrier_k = {k, r_k};
  const double rk = r_k.to_double();

  switch (profile.separation) {
    case CarrierSeparation::KInsideL: {
      const Rational r_l(rng.integer(2, profile.grid_bound));
      const Point<Rational> l{k.x + rng.grid(), k.y + rng.grid()};
      const double rl = r_l.to_double();
      const double kl = distance(k, l);
      if (kl < kCarrierClearance * rl || kl + rk > (1.0 - kCarrierClearance) * rl) throw Rejected{};
      config.carrier_l = RadiusCircle<Rational>{l, r_l};
      break;
    }
    case CarrierSeparation::KOutsideL: {
      const Rational r_l = rng.positive();
      const Point<Rational> l{k.x + Rational(rng.integer(-2 * profile.grid_bound, 2 * profile.grid_bound)),
                             k.y + Rational(rng.integer(-2 * profile.grid_bound, 2 * profile.grid_bound))};
      const double rl = r_l.to_double();
      if (distance(k, l) < (1.0 + 2.0 * kCarrierClearance) * (rk + rl)) throw Rejected{};
      config.carrier_l = RadiusCircle<Rational>{l, r_l};
      break;
    }
    case CarrierSeparation::LIsLine: {
      const std::int64_t a = rng.integer(-profile.grid_bound, profile.grid_bound);
      const std::int64_t b = rng.integer(-profile.grid_bound, profile.grid_bound);
      const std::int64_t c = rng.integer(-profile.grid_bound, profile.grid_bound);
      if (a == 0 && b == 0) throw Rejected{};
      const Line<Rational> line{Rational(a), Rational(b), Rational(c)};
      const double gap = std::abs(line.evaluate(k).to_double()) / std::hypot(double(a), double(b));
      if (gap < (1.0 + 2.0 * kCarrierClearance) * rk) throw Rejected{};
      config.carrier_l = StraightLine<Rational>{line};
      break;
    }
  }

  // A crowded parameter is redrawn on its own; restarting the whole attempt
  // would make long chains exponentially rare.
  std::vector<double> turns;
  for (std::size_t i = 0; i < n; ++i) {
    for (int draw = 0;; ++draw) {
      if (draw == kParamRedraws) throw Rejected{};
      const Rational t = rng.grid();
      const double turn = turn_fraction(t);
      if (std::any_of(turns.begin(), turns.end(),
                      [&](double other) { return circular_gap(turn, other) < profile.min_separation; })) {
        continue;
      }
      turns.push_back(turn);
      config.p_params.push_back(t);
      break;
    }
  }

  if (const auto* line = std::get_if<StraightLine<Rational>>(&config.carrier_l)) {
    const auto& l = line->line;
    config.q_start = rng.grid() / (abs(l.a) + abs(l.b));
  } else {
    config.q_start = rng.grid();
  }
  return config;
}

// Keeps the float realization well conditioned: no flat support triangle, no
// chain point crowding a neighbour, no support circle much larger than the scene.
void check_conditioning(const Chain<Rational>& chain, const GeneratorProfile& profile) {
  const std::size_t n = chain.size();
  const double scale = scene_scale(chain.config);
  const double clearance = profile.min_separation * scale;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    const std::array quad{chain.p[i], chain.q[i], chain.q[j], chain.p[j]};
    for (std::size_t a = 0; a < 4; ++a) {
      for (std::size_t b = a + 1; b < 4; ++b) {
        if (distance(quad[a], quad[b]) < clearance) throw Rejected{};
      }
    }
    const double radius = std::sqrt(chain.support[i].radius_sq.to_double());
    if (radius * profile.min_separation > scale) throw Rejected{};
  }
}

void check_downstream(const Chain<Rational>& chain) {
  const std::size_t n = chain.size();
  if (n % 2 != 0) return;
  const auto polygon = center_polygon(chain);
  const auto k = chain.config.carrier_k.center;
  (void)verify_inscribed_conic(k, as_generalized(chain.config.carrier_l), polygon);
  for (std::size_t i = 0; i < n; ++i) (void)bisector_coincidence_check(chain, i);
  if (n == 6) (void)brianchon_residual(polygon);
}

}  // namespace

std::string_view to_string(CarrierSeparation separation) {
  switch (separation) {
    case CarrierSeparation::KInsideL: return "k-inside";
    case CarrierSeparation::KOutsideL: return "k-outside";
    case CarrierSeparation::LIsLine: return "l-line";
  }
  return "unknown";
}

std::optional<CarrierSeparation> parse_separation(std::string_view text) {
  for (auto s : {CarrierSeparation::KInsideL, CarrierSeparation::KOutsideL, CarrierSeparation::LIsLine}) {
    if (to_string(s) == text) return s;
  }
  return std::nullopt;
}

std::vector<std::size_t> GeneratorProfile::default_n_range() {
  std::vector<std::size_t> range;
  for (std::size_t n = 3; n <= 32; ++n) range.push_back(n);
  return range;
}

void GeneratorProfile::validate() const {
  if (grid_bound < 8) throw GeometryError(ErrorKind::InvalidArgument, "grid bound must be at least 8");
  if (!(min_separation > 0.0)) throw GeometryError(ErrorKind::InvalidArgument, "min separation must be positive");
  if (n_range.empty()) throw GeometryError(ErrorKind::InvalidArgument, "empty n range");
  if (retry_budget == 0) throw GeometryError(ErrorKind::InvalidArgument, "retry budget must be positive");
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

GeneratedConfiguration generate_config(std::size_t n, const GeneratorProfile& profile) {
  profile.validate();
  if (std::find(profile.n_range.begin(), profile.n_range.end(), n) == profile.n_range.end()) {
    throw GeometryError(ErrorKind::InvalidArgument, "n = " + std::to_string(n) + " is outside the profile range");
  }
  if (n < 3) throw GeometryError(ErrorKind::InvalidConfiguration, "chain length must exceed 2");
  const std::uint64_t base = splitmix64(splitmix64(splitmix64(profile.seed) ^ profile_tag(profile.separation)) ^ n);
  for (std::size_t attempt = 0; attempt < profile.retry_budget; ++attempt) {
    GridSampler rng(splitmix64(base ^ attempt), profile.grid_bound);
    try {
      auto config = draw_configuration(n, profile, rng);
      const auto chain = propagate(config);
      check_conditioning(chain, profile);
      check_downstream(chain);
      return {std::move(config), attempt + 1};
    } catch (const Rejected&) {
    } catch (const GeometryError& e) {
      if (!is_degeneracy(e.kind())) throw;
    }
  }
  throw GeometryError(ErrorKind::ExhaustedRetries,
                      "no admissible configuration within " + std::to_string(profile.retry_budget) + " attempts");
}

ChainConfiguration<Rational> random_config(std::size_t n, const GeneratorProfile& profile) {
  return generate_config(n, profile).config;
}

std::span<const std::string_view> scenario_names() { return kScenarioNames; }

ChainConfiguration<Rational> scenario(std::string_view name) {
  ChainConfiguration<Rational> config;
  config.n = 6;
  if (name == "fig2-ellipse") {
    config.carrier_k = {{Rational(0), Rational(0)}, Rational(2)};
    config.carrier_l = RadiusCircle<Rational>{{Rational(1), Rational(0)}, Rational(6)};
    config.p_params = {Rational(0), Rational(1, 2), Rational(2), Rational(-4), Rational(-1), Rational(-1, 3)};
    config.q_start = Rational(1, 5);
  } else if (name == "fig3-parabola") {
    config.carrier_k = {{Rational(0), Rational(4)}, Rational(2)};
    config.carrier_l = StraightLine<Rational>{{Rational(0), Rational(1), Rational(0)}};
    config.p_params = {Rational(0), Rational(1, 2), Rational(2), Rational(-4), Rational(-1), Rational(-1, 3)};
    config.q_start = Rational(1, 2);
  } else if (name == "hyperbola") {
    config.carrier_k = {{Rational(0), Rational(0)}, Rational(2)};
    config.carrier_l = RadiusCircle<Rational>{{Rational(9), Rational(1)}, Rational(3)};
    config.p_params = {Rational(0), Rational(1, 2), Rational(2), Rational(-4), Rational(-1), Rational(-1, 3)};
    config.q_start = Rational(1, 3);
  } else {
    throw GeometryError(ErrorKind::UnknownScenario, "unknown scenario '" + std::string(name) + "'");
  }
  return config;
}

}  // namespace chainconic
