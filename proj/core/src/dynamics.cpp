#include "crn/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace crn {

namespace {

constexpr double kClipThreshold = 1e-12;

void require_finite(std::span<const double> x) {
  for (double v : x)
    if (!std::isfinite(v)) throw NumericalFailure("non-finite state during integration");
}

class Rhs {
 public:
  Rhs(const ReactionNetwork& net, std::span<const double> kappa) : net_(net), kappa_(kappa.begin(), kappa.end()) {
    if (kappa_.size() != net.num_reactions()) throw DimensionError("rate vector length does not match reaction count");
    for (double k : kappa_)
      if (!(k > 0)) throw DomainError("rate constants must be strictly positive");
    const auto& n = net.stoichiometric_matrix();
    stoich_.resize(n.rows() * n.cols());
    for (std::size_t i = 0; i < n.rows(); ++i)
      for (std::size_t j = 0; j < n.cols(); ++j) stoich_[i * n.cols() + j] = n(i, j).get_d();
    rates_.resize(kappa_.size());
  }

  void operator()(const std::vector<double>& x, std::vector<double>& dx) {
    const std::size_t n = net_.num_species();
    const std::size_t p = net_.num_reactions();
    for (std::size_t j = 0; j < p; ++j) {
      double v = kappa_[j];
      const auto& y = net_.source(j);
      for (std::size_t i = 0; i < n; ++i)
        if (y[i] != 0) v *= std::pow(x[i], y[i]);
      rates_[j] = v;
    }
    dx.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < p; ++j) s += stoich_[i * p + j] * rates_[j];
      dx[i] = s;
    }
  }

  double residual(const std::vector<double>& x) {
    std::vector<double> dx;
    (*this)(x, dx);
    double r = 0.0;
    for (double v : dx) r = std::max(r, std::abs(v));
    return r;
  }

 private:
  const ReactionNetwork& net_;
  std::vector<double> kappa_;
  std::vector<double> stoich_;
  std::vector<double> rates_;
};

// Clips tiny negative entries; false when a component is genuinely negative.
bool accept_nonnegative(std::vector<double>& x) {
  for (double& v : x) {
    if (v >= 0) continue;
    if (v > -kClipThreshold) v = 0.0;
    else return false;
  }
  return true;
}

using Terms = std::initializer_list<std::pair<double, const std::vector<double>*>>;

void combine(std::vector<double>& out, std::size_t n, double h, Terms terms) {
  out.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (const auto& [c, k] : terms) s += c * (*k)[i];
    out[i] = h * s;
  }
}

void axpy(std::vector<double>& out, const std::vector<double>& x, double h, Terms terms) {
  combine(out, x.size(), h, terms);
  for (std::size_t i = 0; i < x.size(); ++i) out[i] += x[i];
}

class Recorder {
 public:
  Recorder(SimulationTrace& trace, double t_end, std::size_t samples)
      : trace_(trace), spacing_(samples > 0 ? t_end / static_cast<double>(samples) : t_end) {}

  void maybe_record(double t, const std::vector<double>& x) {
    if (t + 1e-15 >= next_) {
      trace_.times.push_back(t);
      trace_.states.push_back(x);
      next_ = t + spacing_;
    }
  }

  void finish(double t, const std::vector<double>& x) {
    if (trace_.times.empty() || trace_.times.back() != t) {
      trace_.times.push_back(t);
      trace_.states.push_back(x);
    }
  }

 private:
  SimulationTrace& trace_;
  double spacing_;
  double next_ = 0.0;
};

double default_step(const ReactionNetwork& net, std::span<const double> kappa, std::span<const double> x0,
                    double t_end) {
  double max_diag = 0.0;
  const auto j = jacobian(net, kappa, x0);
  for (Eigen::Index i = 0; i < j.rows(); ++i) max_diag = std::max(max_diag, std::abs(j(i, i)));
  // At a boundary point the diagonal can vanish; fall back on the rate scale.
  if (max_diag == 0.0)
    for (double k : kappa) max_diag = std::max(max_diag, k);
  double h = max_diag > 0 ? 1e-3 / max_diag : t_end * 1e-3;
  return std::min(h, t_end / 100.0);
}

}  // namespace

double steady_state_residual(const ReactionNetwork& net, std::span<const double> kappa, std::span<const double> x) {
  if (x.size() != net.num_species()) throw DimensionError("state length does not match species count");
  Rhs f(net, kappa);
  return f.residual(std::vector<double>(x.begin(), x.end()));
}

Eigen::MatrixXd jacobian(const ReactionNetwork& net, std::span<const double> kappa, std::span<const double> x) {
  const std::size_t n = net.num_species();
  const std::size_t p = net.num_reactions();
  if (x.size() != n) throw DimensionError("state length does not match species count");
  if (kappa.size() != p) throw DimensionError("rate vector length does not match reaction count");
  Eigen::MatrixXd dv(p, n);
  dv.setZero();
  for (std::size_t j = 0; j < p; ++j) {
    const auto& y = net.source(j);
    for (std::size_t i = 0; i < n; ++i) {
      if (y[i] == 0) continue;
      double d = kappa[j] * y[i];
      for (std::size_t k = 0; k < n; ++k) {
        const int e = k == i ? y[k] - 1 : y[k];
        if (e > 0) d *= std::pow(x[k], e);
      }
      dv(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = d;
    }
  }
  Eigen::MatrixXd stoich(n, p);
  const auto& nm = net.stoichiometric_matrix();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < p; ++j) stoich(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = nm(i, j).get_d();
  return stoich * dv;
}

SimulationTrace simulate(const ReactionNetwork& net, std::span<const double> kappa, std::span<const double> x0,
                         double t_end, const SimulationOptions& options) {
  const std::size_t n = net.num_species();
  if (x0.size() != n) throw DimensionError("initial state length does not match species count");
  for (double v : x0)
    if (!(v >= 0) || !std::isfinite(v)) throw DomainError("initial state must be nonnegative and finite");
  if (!(t_end > 0)) throw DomainError("end time must be positive");

  Rhs f(net, kappa);
  SimulationTrace trace;
  Recorder rec(trace, t_end, options.samples);
  std::vector<double> x(x0.begin(), x0.end());
  double t = 0.0;
  rec.maybe_record(t, x);

  const double nominal = options.dt > 0 ? options.dt : default_step(net, kappa, x0, t_end);
  const double h_min = std::max(t_end, 1.0) * 1e-15;
  double h = options.adaptive ? nominal * 10 : nominal;

  std::vector<double> k1, k2, k3, k4, k5, k6, k7, tmp, next, x4, delta;
  // Compensated summation of the increments: with the small default step the
  // updates near a steady state fall below the resolution of x.
  std::vector<double> carry(n, 0.0);
  auto steady = [&]() {
    return options.steady_tol > 0 && f.residual(x) < options.steady_tol;
  };

  if (steady()) trace.reached_steady_state = true;
  while (!trace.reached_steady_state && t < t_end) {
    if (trace.steps >= options.max_steps) throw NumericalFailure("step limit reached before the end time");
    const double step = std::min(h, t_end - t);
    bool accepted = false;
    double error_ratio = 0.0;
    if (!options.adaptive) {
      f(x, k1);
      axpy(tmp, x, step / 2, {{1.0, &k1}});
      f(tmp, k2);
      axpy(tmp, x, step / 2, {{1.0, &k2}});
      f(tmp, k3);
      axpy(tmp, x, step, {{1.0, &k3}});
      f(tmp, k4);
      combine(delta, n, step / 6, {{1.0, &k1}, {2.0, &k2}, {2.0, &k3}, {1.0, &k4}});
    } else {
      // Dormand-Prince 5(4).
      f(x, k1);
      axpy(tmp, x, step, {{1.0 / 5, &k1}});
      f(tmp, k2);
      axpy(tmp, x, step, {{3.0 / 40, &k1}, {9.0 / 40, &k2}});
      f(tmp, k3);
      axpy(tmp, x, step, {{44.0 / 45, &k1}, {-56.0 / 15, &k2}, {32.0 / 9, &k3}});
      f(tmp, k4);
      axpy(tmp, x, step, {{19372.0 / 6561, &k1}, {-25360.0 / 2187, &k2}, {64448.0 / 6561, &k3}, {-212.0 / 729, &k4}});
      f(tmp, k5);
      axpy(tmp, x, step,
           {{9017.0 / 3168, &k1}, {-355.0 / 33, &k2}, {46732.0 / 5247, &k3}, {49.0 / 176, &k4}, {-5103.0 / 18656, &k5}});
      f(tmp, k6);
      combine(delta, n, step,
              {{35.0 / 384, &k1}, {500.0 / 1113, &k3}, {125.0 / 192, &k4}, {-2187.0 / 6784, &k5}, {11.0 / 84, &k6}});
      axpy(tmp, x, 1.0, {{1.0, &delta}});
      f(tmp, k7);
      axpy(x4, x, step,
           {{5179.0 / 57600, &k1}, {7571.0 / 16695, &k3}, {393.0 / 640, &k4}, {-92097.0 / 339200, &k5},
            {187.0 / 2100, &k6}, {1.0 / 40, &k7}});
      for (std::size_t i = 0; i < n; ++i) {
        const double scale = options.abs_tol + options.rel_tol * std::max(std::abs(x[i]), std::abs(tmp[i]));
        error_ratio = std::max(error_ratio, std::abs(tmp[i] - x4[i]) / scale);
      }
    }
    next.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double y = delta[i] - carry[i];
      next[i] = x[i] + y;
    }
    accepted = (!options.adaptive || error_ratio <= 1.0) && accept_nonnegative(next);

    if (!accepted) {
      ++trace.rejected_steps;
      if (options.adaptive && error_ratio > 1.0)
        h = step * std::clamp(0.9 * std::pow(error_ratio, -0.2), 0.2, 1.0);
      else
        h = step / 2;
      if (h < h_min) throw NumericalFailure("step size underflow");
      continue;
    }
    require_finite(next);
    for (std::size_t i = 0; i < n; ++i) {
      // A clipped component restarts its compensation.
      carry[i] = next[i] == 0.0 ? 0.0 : (next[i] - x[i]) - (delta[i] - carry[i]);
    }
    x.swap(next);
    t += step;
    ++trace.steps;
    if (t_end - t < h_min) t = t_end;
    if (options.adaptive) {
      const double factor = error_ratio == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(error_ratio, -0.2), 0.2, 5.0);
      h = step * factor;
    } else if (h < nominal) {
      h = std::min(nominal, 2 * h);
    }
    rec.maybe_record(t, x);
    if (steady()) trace.reached_steady_state = true;
  }
  rec.finish(t, x);
  trace.final_residual = f.residual(x);
  return trace;
}

CompatibilityClass::CompatibilityClass(const ReactionNetwork& net, std::vector<double> anchor)
    : anchor_(std::move(anchor)) {
  const std::size_t n = net.num_species();
  if (anchor_.size() != n) throw DimensionError("anchor length does not match species count");
  const auto& nm = net.stoichiometric_matrix();
  Eigen::MatrixXd stoich(n, nm.cols());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < nm.cols(); ++j) stoich(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = nm(i, j).get_d();
  const auto s = static_cast<Eigen::Index>(net.rank());
  const auto nn = static_cast<Eigen::Index>(n);
  if (nm.cols() == 0 || s == 0) {
    s_basis_ = Eigen::MatrixXd(nn, 0);
    w_basis_ = Eigen::MatrixXd::Identity(nn, nn);
    return;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(stoich, Eigen::ComputeFullU);
  s_basis_ = svd.matrixU().leftCols(s);
  w_basis_ = svd.matrixU().rightCols(nn - s);
}

double CompatibilityClass::membership_error(std::span<const double> x) const {
  if (x.size() != anchor_.size()) throw DimensionError("state length does not match species count");
  Eigen::VectorXd d(static_cast<Eigen::Index>(x.size()));
  for (std::size_t i = 0; i < x.size(); ++i) d(static_cast<Eigen::Index>(i)) = x[i] - anchor_[i];
  if (w_basis_.cols() == 0) return 0.0;
  return (w_basis_.transpose() * d).lpNorm<Eigen::Infinity>();
}

CompatibilityClass compatibility_class(const ReactionNetwork& net, std::vector<double> anchor) {
  return CompatibilityClass(net, std::move(anchor));
}

bool in_same_class(const ReactionNetwork& net, std::span<const Rational> x, std::span<const Rational> x0) {
  if (x.size() != net.num_species() || x0.size() != net.num_species())
    throw DimensionError("state length does not match species count");
  std::vector<Rational> d;
  for (std::size_t i = 0; i < x.size(); ++i) d.push_back(x[i] - x0[i]);
  return in_column_span(to_rational(net.stoichiometric_matrix()), d);
}

BirchPoint birch_point(const ReactionGraph& g, std::span<const Rational> kappa, std::span<const double> x0) {
  const auto& net = g.network();
  const std::size_t n = net.num_species();
  if (x0.size() != n) throw DimensionError("anchor length does not match species count");
  bool any_positive = false;
  for (double v : x0) {
    if (!(v >= 0) || !std::isfinite(v)) throw DomainError("anchor must be nonnegative and finite");
    any_positive = any_positive || v > 0;
  }
  if (!any_positive) throw DomainError("anchor must have a positive component");
  if (!check_kappa_balanced(g, kappa).balanced)
    throw NotBalanced("rate constants do not admit a node balanced steady state for this graph");
  const auto particular = solve_positive_steady_state(g, kappa);
  if (!particular.feasible) throw NotBalanced("log-linear steady-state system is inconsistent");

  CompatibilityClass cls(net, std::vector<double>(x0.begin(), x0.end()));
  const Eigen::MatrixXd& w = cls.conservation_basis();
  Eigen::VectorXd log_star(static_cast<Eigen::Index>(n)), anchor(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    log_star(static_cast<Eigen::Index>(i)) = std::log(particular.x[i]);
    anchor(static_cast<Eigen::Index>(i)) = x0[i];
  }

  auto state = [&](const Eigen::VectorXd& c) {
    Eigen::VectorXd lx = log_star + w * c;
    return Eigen::VectorXd(lx.array().exp());
  };
  auto defect = [&](const Eigen::VectorXd& x) { return Eigen::VectorXd(w.transpose() * (x - anchor)); };

  const double scale = std::max(1.0, anchor.lpNorm<Eigen::Infinity>());
  Eigen::VectorXd c = Eigen::VectorXd::Zero(w.cols());
  Eigen::VectorXd x = state(c);
  Eigen::VectorXd f = defect(x);
  std::size_t iter = 0;
  const double target = 1e-13 * scale;
  while (w.cols() > 0 && f.lpNorm<Eigen::Infinity>() > target) {
    if (iter == 100) throw NumericalFailure("Newton iteration for the class steady state did not converge");
    ++iter;
    Eigen::MatrixXd jac = w.transpose() * x.asDiagonal() * w;
    Eigen::VectorXd delta = jac.ldlt().solve(-f);
    double lambda = 1.0;
    const double current = f.norm();
    bool improved = false;
    for (int halving = 0; halving <= 60; ++halving) {
      Eigen::VectorXd c_try = c + lambda * delta;
      Eigen::VectorXd x_try = state(c_try);
      Eigen::VectorXd f_try = defect(x_try);
      if (x_try.allFinite() && f_try.norm() < current) {
        c = c_try;
        x = x_try;
        f = f_try;
        improved = true;
        break;
      }
      lambda /= 2;
    }
    if (!improved) {
      if (f.lpNorm<Eigen::Infinity>() < 1e-10 * scale) break;
      throw NumericalFailure("Newton damping failed to reduce the class defect");
    }
  }

  BirchPoint out;
  out.x.assign(x.data(), x.data() + x.size());
  out.iterations = iter;
  out.membership_error = cls.membership_error(out.x);
  std::vector<double> kd;
  for (const auto& k : kappa) kd.push_back(k.get_d());
  out.residual = steady_state_residual(net, kd, out.x);
  return out;
}

double StabilityReport::max_real_part() const {
  double m = -std::numeric_limits<double>::infinity();
  for (const auto& z : eigenvalues) m = std::max(m, z.real());
  return m;
}

StabilityReport stability_report(const ReactionNetwork& net, std::span<const double> kappa,
                                 std::span<const double> x_star) {
  StabilityReport out;
  out.steady_state.assign(x_star.begin(), x_star.end());
  out.residual = steady_state_residual(net, kappa, x_star);
  if (out.residual >= kSteadyStateTolerance) throw ValidationError("state is not a steady state");
  CompatibilityClass cls(net, out.steady_state);
  const Eigen::MatrixXd& q = cls.subspace_basis();
  out.projected_jacobian = q.transpose() * jacobian(net, kappa, x_star) * q;
  if (q.cols() == 0) {
    out.verdict = StabilityVerdict::Stable;
    return out;
  }
  Eigen::EigenSolver<Eigen::MatrixXd> es(out.projected_jacobian, false);
  bool positive = false;
  bool degenerate = false;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const auto z = es.eigenvalues()(i);
    out.eigenvalues.push_back(z);
    if (z.real() > kSpectralThreshold) positive = true;
    else if (z.real() >= -kSpectralThreshold) degenerate = true;
  }
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end(), [](const auto& a, const auto& b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  out.verdict = positive ? StabilityVerdict::Unstable
                         : degenerate ? StabilityVerdict::Inconclusive : StabilityVerdict::Stable;
  return out;
}

const char* to_string(StabilityVerdict v) {
  switch (v) {
    case StabilityVerdict::Stable: return "stable";
    case StabilityVerdict::Unstable: return "unstable";
    case StabilityVerdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

}  // namespace crn
