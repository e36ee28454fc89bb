#include <doctest.h>

#include <regex>
#include <sstream>

#include "chainconic/cli/commands.hpp"
#include "chainconic/cli/config_io.hpp"
#include "chainconic/cli/svg.hpp"
#include "chainconic/generator.hpp"
#include "test_support.hpp"

using namespace chainconic;
using namespace chainconic::cli;

namespace {

struct Scene {
  Chain<Rational> chain;
  CenterPolygon<Rational> polygon;
  InscribedConic<Rational> inscribed;
};

Scene build(const ChainConfiguration<Rational>& config) {
  auto chain = propagate(config);
  auto polygon = center_polygon(chain);
  auto inscribed = verify_inscribed_conic(config.carrier_k.center, as_generalized(config.carrier_l), polygon);
  return {std::move(chain), std::move(polygon), std::move(inscribed)};
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t hits = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++hits;
  return hits;
}

std::string render_cli(const std::vector<std::string>& args, int expected_exit = 0) {
  std::istringstream in;
  std::ostringstream out, err;
  CHECK(run(args, in, out, err) == expected_exit);
  return out.str();
}

}  // namespace

TEST_CASE("ellipse scene: conic tangent to every side, all elements present") {
  const auto scene = build(scenario("fig2-ellipse"));
  CHECK(scene.inscribed.conic.kind == ConicKind::Ellipse);
  for (std::size_t i = 0; i < scene.polygon.size(); ++i) CHECK(is_tangent(scene.inscribed.conic, scene.polygon.side(i)));
  const auto svg = render_svg(scene.chain, scene.polygon, scene.inscribed.conic);
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("viewBox=\"0 0 1000 1000\"") != std::string::npos);
  CHECK(svg.find("data-kind=\"Ellipse\"") != std::string::npos);
  CHECK(count(svg, "id=\"support-") == 6);
  CHECK(count(svg, "id=\"P-") == 6);
  CHECK(count(svg, "id=\"Q-") == 6);
  CHECK(count(svg, "id=\"O-") == 6);
  CHECK(count(svg, "id=\"conic-branch-") == 1);
  CHECK(svg.find("id=\"center-polygon\"") != std::string::npos);
  CHECK(svg.find("id=\"focus-L\"") != std::string::npos);
}

TEST_CASE("parabola scene shows the carrier line and a directrix") {
  const auto scene = build(scenario("fig3-parabola"));
  CHECK(scene.inscribed.conic.kind == ConicKind::Parabola);
  for (std::size_t i = 0; i < scene.polygon.size(); ++i) CHECK(is_tangent(scene.inscribed.conic, scene.polygon.side(i)));
  const auto svg = render_svg(scene.chain, scene.polygon, scene.inscribed.conic);
  CHECK(svg.find("<line id=\"carrier-L\"") != std::string::npos);
  CHECK(svg.find("id=\"directrix\"") != std::string::npos);
  CHECK(svg.find("data-kind=\"Parabola\"") != std::string::npos);
  CHECK(svg.find("id=\"focus-L\"") == std::string::npos);
}

TEST_CASE("hyperbola scene draws both branches") {
  const auto scene = build(scenario("hyperbola"));
  CHECK(scene.inscribed.conic.kind == ConicKind::Hyperbola);
  const auto svg = render_svg(scene.chain, scene.polygon, scene.inscribed.conic);
  CHECK(count(svg, "id=\"conic-branch-") == 2);
}

TEST_CASE("path coordinates stay near the view box") {
  for (const auto name : scenario_names()) {
    const auto scene = build(scenario(name));
    const auto svg = render_svg(scene.chain, scene.polygon, scene.inscribed.conic);
    const std::regex pair(R"((-?\d+\.\d{3}),(-?\d+\.\d{3}))");
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), pair); it != std::sregex_iterator(); ++it) {
      const double x = std::stod((*it)[1]), y = std::stod((*it)[2]);
      CHECK(x >= -100.0);
      CHECK(x <= 1100.0);
      CHECK(y >= -100.0);
      CHECK(y <= 1100.0);
    }
  }
}

TEST_CASE("rendering is byte-deterministic") {
  for (const auto name : scenario_names()) {
    const std::string a = render_cli({"render", "--scenario", std::string(name)});
    const std::string b = render_cli({"render", "--scenario", std::string(name)});
    CHECK(!a.empty());
    CHECK(a == b);
  }
  GeneratorProfile profile;
  profile.seed = 99;
  const auto scene = build(random_config(8, profile));
  CHECK(render_svg(scene.chain, scene.polygon, scene.inscribed.conic) ==
        render_svg(scene.chain, scene.polygon, scene.inscribed.conic));
}

TEST_CASE("render refuses an open chain unless forced") {
  GeneratorProfile profile;
  profile.seed = 0;
  const std::string doc = cli::dump_config(random_config(5, profile));
  std::istringstream in(doc);
  std::ostringstream out, err;
  CHECK(run({"render", "-"}, in, out, err) == 1);
  CHECK(out.str().empty());
  std::istringstream in2(doc);
  std::ostringstream out2, err2;
  CHECK(run({"render", "--force", "-"}, in2, out2, err2) == 0);
  CHECK(out2.str().find("</svg>") != std::string::npos);
  CHECK(out2.str().find("id=\"conic\"") == std::string::npos);
}
