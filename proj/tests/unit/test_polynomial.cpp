#include <doctest.h>

#include "crn/polynomial.hpp"
#include "support.hpp"

using namespace crn;
namespace t = crn::testing;

TEST_CASE("printing uses descending lexicographic order") {
  auto p = t::poly(4, {{4}, {1, 3, 3}, {4}});
  CHECK(p.to_string() == "k1*k3^2 + 2*k4");
  CHECK(Polynomial(3).to_string() == "0");
  CHECK(Polynomial::constant(2, 5).to_string() == "5");
}

TEST_CASE("arithmetic cancels to zero") {
  auto a = t::poly(3, {{1}, {2, 3}});
  auto b = a;
  CHECK((a - b).is_zero());
  CHECK((a + b) == a * Polynomial::constant(3, 2));
}

TEST_CASE("binomial square") {
  auto x = Polynomial::variable(2, 0);
  auto y = Polynomial::variable(2, 1);
  auto sq = (x + y).pow(2);
  CHECK(sq == t::poly(2, {{1, 1}, {1, 2}, {1, 2}, {2, 2}}));
  CHECK(sq.num_terms() == 3);
}

TEST_CASE("monomial gcd and division") {
  auto p = t::poly(3, {{1, 1, 3}, {1, 2, 3, 3}});
  CHECK(p.monomial_gcd() == Exponents{1, 0, 1});
  CHECK(p.divide_monomial(p.monomial_gcd()) == t::poly(3, {{1}, {2, 3}}));
}

TEST_CASE("evaluation is a ring homomorphism") {
  t::Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    Polynomial a(3), b(3);
    for (int k = 0; k < 4; ++k) {
      Exponents e{static_cast<unsigned>(rng.uniform(0, 2)), static_cast<unsigned>(rng.uniform(0, 2)),
                  static_cast<unsigned>(rng.uniform(0, 2))};
      a.add_term(e, rng.uniform(-3, 3));
      e[rng.uniform(0, 2)] += 1;
      b.add_term(e, rng.uniform(-3, 3));
    }
    auto x = t::random_kappa(rng, 3);
    CHECK((a * b).evaluate(std::span<const Rational>(x)) ==
          a.evaluate(std::span<const Rational>(x)) * b.evaluate(std::span<const Rational>(x)));
    CHECK((a - b).evaluate(std::span<const Rational>(x)) ==
          a.evaluate(std::span<const Rational>(x)) - b.evaluate(std::span<const Rational>(x)));
    auto xd = t::to_doubles(x);
    CHECK(a.evaluate(std::span<const double>(xd)) ==
          doctest::Approx(a.evaluate(std::span<const Rational>(x)).get_d()).epsilon(1e-12));
  }
}
