#include <doctest.h>

#include <cmath>

#include "brauer/kernel.hpp"
#include "brauer/monte_carlo.hpp"

using namespace brauer;

TEST_CASE("L=2 has a single state") {
  const auto r = monte_carlo_crosscheck(2, 1000, 3, nullptr);
  REQUIRE(r.orbits.size() == 1);
  CHECK(r.orbits[0].estimate == 1.0);
  CHECK(r.orbits[0].std_error == 0.0);
}

TEST_CASE("L=4 matches 6/7 and 1/7") {
  const GroundState gs = groundstate(4);
  const auto r = monte_carlo_crosscheck(4, 1000000, 11, &gs);
  REQUIRE(r.orbits.size() == 2);
  CHECK(*r.orbits[0].exact == doctest::Approx(6.0 / 7.0));
  CHECK(*r.orbits[1].exact == doctest::Approx(1.0 / 7.0));
  CHECK(r.within(4.0));
  CHECK(std::abs(r.orbits[0].estimate + r.orbits[1].estimate - 1.0) < 1e-12);
}

TEST_CASE("fixed seed is deterministic and thread independent") {
  const GroundState gs = groundstate(6);
  MonteCarloOptions one;
  one.threads = 1;
  MonteCarloOptions many;
  many.threads = 4;
  const auto a = monte_carlo_crosscheck(6, 200000, 42, &gs, one);
  const auto b = monte_carlo_crosscheck(6, 200000, 42, &gs, many);
  REQUIRE(a.orbits.size() == b.orbits.size());
  for (std::size_t k = 0; k < a.orbits.size(); ++k) {
    CHECK(a.orbits[k].estimate == b.orbits[k].estimate);
    CHECK(a.orbits[k].std_error == b.orbits[k].std_error);
  }
  CHECK(a.to_json() == b.to_json());
  const auto c = monte_carlo_crosscheck(6, 200000, 43, &gs, one);
  CHECK(c.to_json() != a.to_json());
}

TEST_CASE("doubling the samples stays inside the combined band") {
  const GroundState gs = groundstate(6);
  const auto a = monte_carlo_crosscheck(6, 500000, 5, &gs);
  const auto b = monte_carlo_crosscheck(6, 1000000, 5, &gs);
  for (std::size_t k = 0; k < a.orbits.size(); ++k) {
    const double band = 5.0 * std::hypot(a.orbits[k].std_error, b.orbits[k].std_error);
    CHECK(std::abs(a.orbits[k].estimate - b.orbits[k].estimate) <= band);
  }
}

TEST_CASE("odd L without exact values") {
  const auto r = monte_carlo_crosscheck(5, 100000, 1, nullptr);
  REQUIRE(r.orbits.size() == 3);
  for (const auto& o : r.orbits) {
    CHECK_FALSE(o.exact.has_value());
    CHECK_FALSE(o.z.has_value());
  }
  CHECK(r.within(5.0));
  CHECK(r.to_table().find("L=5") != std::string::npos);
}

TEST_CASE("argument checks") {
  CHECK_THROWS(monte_carlo_crosscheck(1, 1000, 1));
  CHECK_THROWS(monte_carlo_crosscheck(4, 10, 1));
  const GroundState gs = groundstate(4);
  CHECK_THROWS(monte_carlo_crosscheck(6, 1000, 1, &gs));
}
