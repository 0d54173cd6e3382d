#include <doctest.h>

#include <cmath>

#include "crn/balance.hpp"
#include "crn/dynamics.hpp"
#include "crn/errors.hpp"
#include "support.hpp"

using namespace crn;
namespace t = crn::testing;

TEST_CASE("reversible pair relaxes to the Birch point") {
  auto net = t::network_from("A <=> B\n");
  std::vector<double> kappa{2, 1};
  std::vector<double> x0{3, 0.5};
  auto trace = simulate(*net, kappa, x0, 50.0);
  CHECK(trace.reached_steady_state);
  const auto& x = trace.final_state();
  CHECK(x[0] + x[1] == doctest::Approx(3.5).epsilon(1e-12));
  CHECK(x[1] == doctest::Approx(2 * x[0]).epsilon(1e-8));

  auto g = canonical_complex_graph(net);
  auto birch = birch_point(g, t::rationals({2, 1}), x0);
  CHECK(birch.x[0] == doctest::Approx(3.5 / 3).epsilon(1e-10));
  CHECK(birch.x[1] == doctest::Approx(7.0 / 3).epsilon(1e-10));
}

TEST_CASE("adaptive and fixed-step integration agree") {
  auto net = t::running_example();
  std::vector<double> kappa{1, 1, 1, 1, 1, 1};
  std::vector<double> x0{0.3, 1.2};
  SimulationOptions fixed;
  fixed.steady_tol = 0;
  SimulationOptions adaptive = fixed;
  adaptive.adaptive = true;
  adaptive.rel_tol = 1e-10;
  auto a = simulate(*net, kappa, x0, 2.0, fixed);
  auto b = simulate(*net, kappa, x0, 2.0, adaptive);
  for (std::size_t i = 0; i < 2; ++i) CHECK(a.final_state()[i] == doctest::Approx(b.final_state()[i]).epsilon(1e-7));
  CHECK(b.steps < a.steps);
}

TEST_CASE("trajectories stay in the compatibility class") {
  auto net = t::running_example();
  std::vector<double> kappa{1, 2, 3, 1, 0.5, 2};
  std::vector<double> x0{0.8, 0.1};
  auto cls = compatibility_class(*net, x0);
  CHECK(cls.conservation_basis().cols() == 1);
  auto trace = simulate(*net, kappa, x0, 5.0);
  for (const auto& x : trace.states) {
    CHECK(cls.membership_error(x) < 1e-10);
    for (double v : x) CHECK(v >= 0);
  }
}

TEST_CASE("Jacobian matches central differences") {
  auto net = t::running_example();
  std::vector<double> kappa{1, 2, 3, 1, 0.5, 2};
  std::vector<double> x{0.7, 1.3};
  auto j = jacobian(*net, kappa, x);
  const double h = 1e-6;
  for (std::size_t c = 0; c < 2; ++c) {
    auto xp = x, xm = x;
    xp[c] += h;
    xm[c] -= h;
    auto fp = ode_rhs<double>(*net, xp, kappa);
    auto fm = ode_rhs<double>(*net, xm, kappa);
    for (std::size_t r = 0; r < 2; ++r)
      CHECK(j(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) ==
            doctest::Approx((fp[r] - fm[r]) / (2 * h)).epsilon(1e-6));
  }
}

TEST_CASE("exact class membership") {
  auto net = t::running_example();
  CHECK(in_same_class(*net, t::rationals({1, 2}), t::rationals({2, 1})));
  CHECK_FALSE(in_same_class(*net, t::rationals({1, 2}), t::rationals({2, 2})));
}

TEST_CASE("Birch point is the node-balanced steady state that is stable in its class") {
  t::Rng rng(53);
  auto g = t::table1_graph(4);
  for (int trial = 0; trial < 10; ++trial) {
    auto kappa = t::balanced_kappa(rng, g);
    std::vector<double> x0{rng.uniform_real(0.1, 2), rng.uniform_real(0.1, 2)};
    auto birch = birch_point(g, kappa, x0);
    CHECK(birch.residual < 1e-10);
    CHECK(birch.membership_error < 1e-10);
    auto report = stability_report(g.network(), t::to_doubles(kappa), birch.x);
    CHECK(report.verdict == StabilityVerdict::Stable);
    CHECK(report.eigenvalues.size() == 1);
  }
}

TEST_CASE("Birch point requires balanced rates") {
  auto g = t::table1_graph(2);
  std::vector<double> x0{1, 1};
  CHECK_THROWS_AS(birch_point(g, t::rationals({1, 1, 1, 1, 2, 2}), x0), NotBalanced);
}

TEST_CASE("stability report rejects points that are not steady") {
  auto net = t::running_example();
  std::vector<double> kappa{1, 1, 1, 1, 1, 1};
  std::vector<double> x{1, 2};
  CHECK_THROWS_AS(stability_report(*net, kappa, x), ValidationError);
}
