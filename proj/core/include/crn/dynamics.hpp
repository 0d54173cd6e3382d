#pragma once

// Numerical integration of dx/dt = N v(x), positive steady states inside a
// stoichiometric compatibility class, and linear stability relative to it.

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "crn/balance.hpp"
#include "crn/network.hpp"
#include "crn/reaction_graph.hpp"

namespace crn {

struct SimulationOptions {
  /// Fixed RK4 step; 0 picks 1e-3 times the characteristic time at x0.
  double dt = 0.0;
  /// Use the embedded Dormand-Prince 5(4) pair instead of fixed-step RK4.
  bool adaptive = false;
  double rel_tol = 1e-8;
  double abs_tol = 1e-12;
  /// Stop once ||N v(x)||_inf falls below this; 0 disables early stopping.
  double steady_tol = 1e-10;
  std::size_t max_steps = 50'000'000;
  /// Approximate number of recorded states (first and last always kept).
  std::size_t samples = 200;
};

struct SimulationTrace {
  std::vector<double> times;
  std::vector<std::vector<double>> states;
  double final_residual = 0.0;
  bool reached_steady_state = false;
  std::size_t steps = 0;
  std::size_t rejected_steps = 0;

  [[nodiscard]] const std::vector<double>& final_state() const { return states.back(); }
};

SimulationTrace simulate(const ReactionNetwork& net, std::span<const double> kappa, std::span<const double> x0,
                         double t_end, const SimulationOptions& options = {});

/// ||N v(x)||_inf.
double steady_state_residual(const ReactionNetwork& net, std::span<const double> kappa, std::span<const double> x);

/// d(N v)/dx at x.
Eigen::MatrixXd jacobian(const ReactionNetwork& net, std::span<const double> kappa, std::span<const double> x);

/// x0 + S intersected with the nonnegative orthant.
class CompatibilityClass {
 public:
  CompatibilityClass(const ReactionNetwork& net, std::vector<double> anchor);

  [[nodiscard]] const std::vector<double>& anchor() const { return anchor_; }
  /// n x s orthonormal basis of S.
  [[nodiscard]] const Eigen::MatrixXd& subspace_basis() const { return s_basis_; }
  /// n x (n - s) orthonormal basis of the orthogonal complement of S.
  [[nodiscard]] const Eigen::MatrixXd& conservation_basis() const { return w_basis_; }
  /// ||W^T (x - x0)||_inf.
  [[nodiscard]] double membership_error(std::span<const double> x) const;

 private:
  std::vector<double> anchor_;
  Eigen::MatrixXd s_basis_;
  Eigen::MatrixXd w_basis_;
};

CompatibilityClass compatibility_class(const ReactionNetwork& net, std::vector<double> anchor);

/// Exact membership: x - x0 lies in the column span of N.
bool in_same_class(const ReactionNetwork& net, std::span<const Rational> x, std::span<const Rational> x0);

struct BirchPoint {
  std::vector<double> x;
  double residual = 0.0;
  double membership_error = 0.0;
  std::size_t iterations = 0;
};

/// The positive node balanced steady state in the class of x0. Throws
/// NotBalanced when kappa fails the exact balance test and NumericalFailure
/// when Newton does not converge.
BirchPoint birch_point(const ReactionGraph& g, std::span<const Rational> kappa, std::span<const double> x0);

enum class StabilityVerdict { Stable, Unstable, Inconclusive };

struct StabilityReport {
  std::vector<double> steady_state;
  double residual = 0.0;
  /// Jacobian restricted to S in an orthonormal basis (s x s).
  Eigen::MatrixXd projected_jacobian;
  std::vector<std::complex<double>> eigenvalues;
  StabilityVerdict verdict = StabilityVerdict::Inconclusive;

  [[nodiscard]] double max_real_part() const;
};

constexpr double kSteadyStateTolerance = 1e-8;
constexpr double kSpectralThreshold = 1e-12;

StabilityReport stability_report(const ReactionNetwork& net, std::span<const double> kappa,
                                 std::span<const double> x_star);

const char* to_string(StabilityVerdict v);

}  // namespace crn
