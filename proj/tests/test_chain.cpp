#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "chainconic/chain.hpp"
#include "chainconic/generator.hpp"
#include "test_support.hpp"

using namespace chainconic;
using namespace chainconic::testing;

namespace {

// Values below come from tests/oracles/chain_oracle.py.
ChainConfiguration<Q> oracle_config(std::size_t n = 4) {
  ChainConfiguration<Q> config;
  config.carrier_k = {pt(0, 0), Q(1)};
  config.carrier_l = RadiusCircle<Q>{pt(4, 0), Q(2)};
  config.n = n;
  config.p_params = {Q(0), Q(1), Q(-1), Q(1, 3)};
  config.p_params.resize(n);
  config.q_start = Q(0);
  return config;
}

GeometryError error_of(auto&& fn) {
  try {
    fn();
  } catch (const GeometryError& e) {
    return e;
  }
  FAIL("expected a GeometryError");
  return GeometryError(ErrorKind::InvalidArgument, "unreachable");
}

}  // namespace

TEST_CASE("propagate matches the independent oracle") {
  const auto chain = propagate(oracle_config());
  REQUIRE(chain.size() == 4);
  CHECK(chain.p[3] == PointQ{Q(4, 5), Q(3, 5)});
  CHECK(chain.q[0] == pt(6, 0));
  CHECK(chain.q[1] == PointQ{Q(52, 25), Q(-14, 25)});
  CHECK(chain.q[2] == PointQ{Q(52, 25), Q(14, 25)});
  CHECK(chain.q[3] == PointQ{Q(76, 29), Q(-42, 29)});
  CHECK(chain.support[0].center == PointQ{Q(7, 2), Q(7, 2)});
  CHECK(chain.support[1].center == PointQ{Q(7, 8), Q(0)});
  CHECK(chain.support[2].center == PointQ{Q(7, 5), Q(-7, 10)});
  CHECK(chain.support[3].center == PointQ{Q(7, 2), Q(7, 6)});
  CHECK(closure_residual(chain) == Q(0));
}

TEST_CASE("chain invariants hold exactly") {
  const auto chain = propagate(oracle_config());
  const auto k = chain.config.carrier_k.circle();
  const auto l = std::get<RadiusCircle<Q>>(chain.config.carrier_l).circle();
  for (std::size_t i = 0; i < chain.size(); ++i) {
    CHECK(on_circle(chain.p[i], k));
    CHECK(on_circle(chain.q[i], l));
  }
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    for (const auto& point : {chain.p[i], chain.q[i], chain.q[i + 1], chain.p[i + 1]}) {
      CHECK(on_circle(point, chain.support[i]));
    }
  }
}

TEST_CASE("carriers touching at P_1 force a duplicate chain point") {
  // c(K) and c(L) are tangent at (1, 0) = P_1, so the step-1 circle meets
  // c(L) again exactly there.
  auto config = oracle_config();
  config.carrier_l = RadiusCircle<Q>{pt(3, 0), Q(2)};
  config.q_start = Q(0);
  const auto e = error_of([&] { propagate(config); });
  CHECK(e.kind() == ErrorKind::DuplicateChainPoint);
  CHECK(e.index() == 2u);
}

TEST_CASE("tangent step-1 circle is reported with its index") {
  ChainConfiguration<Q> config;
  config.carrier_k = {pt(0, 0), Q(1)};
  config.carrier_l = RadiusCircle<Q>{pt(-2, 0), Q(1)};
  config.n = 4;
  config.p_params = {Q(0), Q(1), Q(2), Q(-2)};
  config.q_start = Q(0);  // (-1, 0): c(K) itself is the step-1 circle and touches c(L) there
  const auto e = error_of([&] { propagate(config); });
  CHECK(e.kind() == ErrorKind::DegenerateStep);
  CHECK(e.cause() == ErrorKind::TangentContact);
  CHECK(e.index() == 1u);
}

TEST_CASE("configuration validation") {
  auto repeated = oracle_config();
  repeated.p_params = {Q(0), Q(1), Q(1), Q(1, 3)};
  CHECK(error_of([&] { propagate(repeated); }).kind() == ErrorKind::InvalidConfiguration);

  auto too_short = oracle_config();
  too_short.n = 2;
  too_short.p_params = {Q(0), Q(1)};
  CHECK(error_of([&] { propagate(too_short); }).kind() == ErrorKind::InvalidConfiguration);

  auto count = oracle_config();
  count.p_params.pop_back();
  CHECK(error_of([&] { count.validate(); }).kind() == ErrorKind::InvalidConfiguration);

  auto same = oracle_config();
  same.carrier_l = RadiusCircle<Q>{pt(0, 0), Q(1)};
  CHECK(error_of([&] { same.validate(); }).kind() == ErrorKind::InvalidConfiguration);

  auto off = oracle_config();
  off.q_start = pt(0, 0);
  CHECK(error_of([&] { off.validate(); }).kind() == ErrorKind::InvalidConfiguration);
}

TEST_CASE("closure: even chains close, odd controls are flagged") {
  const auto profile = GeneratorProfile{.separation = CarrierSeparation::KOutsideL, .seed = 3};
  for (std::size_t n : {4u, 6u, 8u}) {
    const auto chain = propagate(random_config(n, profile));
    CHECK(closure_residual(chain) == Q(0));
    CHECK(verify_closure(chain));
  }
  const auto odd = propagate(random_config(5, profile));
  CHECK_FALSE(verify_closure(odd));
  CHECK(error_of([&] { center_polygon(odd); }).kind() == ErrorKind::NotClosed);
}

TEST_CASE("closure residual is unchanged by a similarity of the whole chain") {
  const auto chain = propagate(random_config(5, GeneratorProfile{.seed = 9}));
  const auto sim = Similarity::from(Q(2, 7), Q(3, 2), Q(-5), Q(1, 3));
  auto moved = chain;
  for (auto& p : moved.p) p = sim(p);
  for (auto& q : moved.q) q = sim(q);
  CHECK(closure_residual(moved) == closure_residual(chain));
  CHECK_FALSE(closure_residual(chain).is_zero());
}

TEST_CASE("center_polygon") {
  const auto chain = propagate(random_config(6, GeneratorProfile{.seed = 1}));
  const auto polygon = center_polygon(chain);
  REQUIRE(polygon.size() == 6);
  for (std::size_t i = 0; i < 6; ++i) {
    const auto& o = polygon.vertices[i];
    const Q r = squared_distance(o, chain.p[i]);
    CHECK(squared_distance(o, chain.q[i]) == r);
    CHECK(squared_distance(o, chain.q[(i + 1) % 6]) == r);
    CHECK(squared_distance(o, chain.p[(i + 1) % 6]) == r);
  }
}

TEST_CASE("center_polygon rejects collinear quadruples and repeated centres") {
  Chain<Q> flat;
  flat.config.n = 3;
  flat.p = {pt(0, 0), pt(1, 0), pt(2, 0)};
  flat.q = {pt(3, 0), pt(4, 0), pt(5, 0)};
  flat.support = {ProperCircle<Q>{pt(0, 1), Q(1)}, ProperCircle<Q>{pt(0, 2), Q(1)}, ProperCircle<Q>{pt(0, 3), Q(1)}};
  flat.config.carrier_k = {pt(0, 0), Q(1)};
  flat.config.carrier_l = RadiusCircle<Q>{pt(9, 9), Q(1)};
  CHECK(error_of([&] { center_polygon(flat); }).kind() == ErrorKind::DegenerateCenter);

  auto twin = propagate(random_config(4, GeneratorProfile{.seed = 2}));
  twin.support[1].center = twin.support[0].center;
  const auto e = error_of([&] { center_polygon(twin); });
  CHECK(e.kind() == ErrorKind::DegenerateCenter);
  CHECK(e.index() == 1u);
}

TEST_CASE("reversing the parameters reverses the chain") {
  for (std::uint64_t seed : {0u, 1u, 2u}) {
    const auto chain = propagate(random_config(6, GeneratorProfile{.seed = seed}));
    auto config = chain.config;
    std::reverse(config.p_params.begin(), config.p_params.end());
    config.q_start = chain.q.back();
    const auto back = propagate(config);
    for (std::size_t i = 0; i < 6; ++i) {
      CHECK(back.p[i] == chain.p[5 - i]);
      CHECK(back.q[i] == chain.q[5 - i]);
    }
  }
}

TEST_CASE("float and exact realizations agree") {
  const auto exact = propagate(oracle_config());
  const auto approx = propagate(to_float(oracle_config()));
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(approx.q[i].x == doctest::Approx(exact.q[i].x.to_double()).epsilon(1e-12));
    CHECK(approx.q[i].y == doctest::Approx(exact.q[i].y.to_double()).epsilon(1e-12));
  }
  CHECK(std::abs(closure_residual(approx)) < 1e-12);
  CHECK(verify_closure(approx));
}

TEST_CASE("line carriers parametrise exactly") {
  const Carrier<Q> carrier = StraightLine<Q>{{Q(3), Q(-4), Q(7)}};
  const auto& line = std::get<StraightLine<Q>>(carrier).line;
  for (const Q& t : {Q(0), Q(1, 3), Q(-5, 2)}) CHECK(on_line(carrier_point(carrier, t), line));
}
