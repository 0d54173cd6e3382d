#include <doctest.h>

#include "crn/errors.hpp"
#include "crn/network.hpp"
#include "support.hpp"

using namespace crn;

TEST_CASE("running example parses into six reactions on four complexes") {
  auto net = crn::testing::running_example();
  CHECK(net->num_species() == 2);
  CHECK(net->num_complexes() == 4);
  CHECK(net->num_reactions() == 6);
  CHECK(net->rank() == 1);
  CHECK(net->source(0) == Complex{3, 0});
  CHECK(net->target(5) == Complex{3, 0});
  CHECK(net->reactions()[0].rate.is_symbolic());
  CHECK(net->reactions()[0].rate.symbol() == "k1");
}

TEST_CASE("stoichiometric matrix columns are target minus source") {
  auto net = crn::testing::running_example();
  const auto& n = net->stoichiometric_matrix();
  CHECK(n(0, 0) == -2);
  CHECK(n(1, 0) == 2);
  CHECK(n(0, 4) == -3);
  CHECK(n(1, 4) == 3);
}

TEST_CASE("reversible arrows and numeric rates") {
  auto net = parse_network("A + B <=> 2C @ 1/2, 3\nC -> 0 @ 0.1\n");
  REQUIRE(net.num_reactions() == 3);
  CHECK(net.reactions()[0].rate.rational() == Rational(1, 2));
  CHECK(net.reactions()[1].rate.rational() == Rational(3));
  CHECK(net.reactions()[1].source == net.reactions()[0].target);
  CHECK(net.reactions()[2].rate.rational() == Rational(1, 10));
  auto rates = net.rational_rates();
  REQUIRE(rates.has_value());
  CHECK(rates->size() == 3);
}

TEST_CASE("parse errors carry a line number") {
  CHECK_THROWS_AS(parse_network("A -> A\n"), ParseError);
  CHECK_THROWS_AS(parse_network("A -> B\nA -> B\n"), ParseError);
  CHECK_THROWS_AS(parse_network("A -> B @ -1\n"), ParseError);
  CHECK_THROWS_AS(parse_network("species: A\nA -> B\n"), ParseError);
  CHECK_THROWS_AS(parse_network("A => B\n"), ParseError);
  try {
    parse_network("A -> B\n\nB -> B\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("3") != std::string::npos);
  }
}

TEST_CASE("format_network round-trips") {
  auto net = crn::testing::running_example();
  CHECK(parse_network(format_network(*net)) == *net);
  auto numeric = parse_network("A <=> 2B @ 1/3, 2\n0 -> A @ 5\n");
  CHECK(parse_network(format_network(numeric)) == numeric);
}

TEST_CASE("mass-action rates") {
  auto net = crn::testing::running_example();
  auto x = crn::testing::rationals({2, 3});
  auto k = crn::testing::rationals({1, 1, 1, 1, 1, 1});
  auto v = mass_action_rates<Rational>(*net, x, k);
  CHECK(v[0] == 8);
  CHECK(v[1] == 18);
  CHECK(v[2] == 27);
  CHECK(v[3] == 12);
  auto f = ode_rhs<Rational>(*net, x, k);
  CHECK(f[0] + f[1] == 0);  // total mass is conserved
}

TEST_CASE("rate values reject non-positive numbers") {
  CHECK_THROWS(RateValue(Rational(0)));
  CHECK_THROWS(RateValue(-1.0));
  CHECK(RateValue(2.5).as_double() == 2.5);
}
