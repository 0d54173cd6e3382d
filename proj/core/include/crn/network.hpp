#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "crn/errors.hpp"
#include "crn/exact.hpp"

namespace crn {

/// Nonnegative stoichiometric coefficients, one per species.
using Complex = std::vector<int>;

/// A rate constant: a symbol such as `k3`, an exact positive rational, or a
/// positive double.
class RateValue {
 public:
  RateValue() : value_(std::string()) {}
  explicit RateValue(std::string symbol);
  explicit RateValue(Rational value);
  explicit RateValue(double value);

  [[nodiscard]] bool is_symbolic() const { return std::holds_alternative<std::string>(value_); }
  [[nodiscard]] bool is_rational() const { return std::holds_alternative<Rational>(value_); }
  [[nodiscard]] bool is_double() const { return std::holds_alternative<double>(value_); }

  [[nodiscard]] const std::string& symbol() const { return std::get<std::string>(value_); }
  [[nodiscard]] const Rational& rational() const { return std::get<Rational>(value_); }
  [[nodiscard]] double as_double() const;

  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const RateValue& a, const RateValue& b) { return a.value_ == b.value_; }

 private:
  std::variant<std::string, Rational, double> value_;
};

struct Reaction {
  std::size_t source = 0;  // index into the complex list
  std::size_t target = 0;
  RateValue rate;

  friend bool operator==(const Reaction&, const Reaction&) = default;
};

/// Species, complexes and reactions of a mass-action network. Construction
/// validates the structure; the object is immutable afterwards.
class ReactionNetwork {
 public:
  ReactionNetwork(std::vector<std::string> species, std::vector<Complex> complexes,
                  std::vector<Reaction> reactions);

  [[nodiscard]] std::size_t num_species() const { return species_.size(); }
  [[nodiscard]] std::size_t num_complexes() const { return complexes_.size(); }
  [[nodiscard]] std::size_t num_reactions() const { return reactions_.size(); }

  [[nodiscard]] const std::vector<std::string>& species() const { return species_; }
  [[nodiscard]] const std::vector<Complex>& complexes() const { return complexes_; }
  [[nodiscard]] const std::vector<Reaction>& reactions() const { return reactions_; }

  [[nodiscard]] const Complex& source(std::size_t j) const { return complexes_[reactions_[j].source]; }
  [[nodiscard]] const Complex& target(std::size_t j) const { return complexes_[reactions_[j].target]; }

  [[nodiscard]] std::optional<std::size_t> species_index(std::string_view name) const;
  [[nodiscard]] std::optional<std::size_t> complex_index(const Complex& c) const;
  /// Index of the reaction source -> target, if present.
  [[nodiscard]] std::optional<std::size_t> reaction_index(std::size_t source, std::size_t target) const;

  /// n x p matrix whose column j is target_j - source_j.
  [[nodiscard]] const IntMatrix& stoichiometric_matrix() const { return stoichiometry_; }
  /// n x m matrix whose columns are the complexes.
  [[nodiscard]] IntMatrix complex_matrix() const;
  [[nodiscard]] std::size_t rank() const { return rank_; }

  /// Rate constants as exact rationals, if every one is numeric and rational.
  [[nodiscard]] std::optional<std::vector<Rational>> rational_rates() const;
  /// Rate constants as doubles, if every one is numeric.
  [[nodiscard]] std::optional<std::vector<double>> double_rates() const;

  /// Same structure with the given rate constants.
  [[nodiscard]] ReactionNetwork with_rates(std::span<const RateValue> rates) const;

  friend bool operator==(const ReactionNetwork& a, const ReactionNetwork& b) {
    return a.species_ == b.species_ && a.complexes_ == b.complexes_ && a.reactions_ == b.reactions_;
  }

 private:
  std::vector<std::string> species_;
  std::vector<Complex> complexes_;
  std::vector<Reaction> reactions_;
  IntMatrix stoichiometry_;
  std::size_t rank_ = 0;
};

using NetworkPtr = std::shared_ptr<const ReactionNetwork>;

/// Parses the line-oriented `.crn` format:
///
///     species: A B            (optional; fixes the species order)
///     # comment
///     r1: 2 A + B -> 0 @ 3/2
///     r2: A <=> B @ 1, k3     (forward reaction first)
///
/// A missing `@` clause gives the reaction the symbolic rate `k<j>`.
ReactionNetwork parse_network(std::string_view text);
NetworkPtr load_network(const std::string& path);

/// Writes a network in `.crn` form; parse_network(format_network(net)) == net
/// for every parsed network.
std::string format_network(const ReactionNetwork& net);
std::string format_complex(const ReactionNetwork& net, const Complex& c);

/// x^y with the 0^0 = 1 convention.
template <class Scalar>
Scalar monomial(std::span<const Scalar> x, const Complex& y) {
  Scalar out(1);
  for (std::size_t i = 0; i < y.size(); ++i)
    for (int e = 0; e < y[i]; ++e) out *= x[i];
  return out;
}

/// v_j = kappa_j * x^{source_j}.
template <class Scalar>
std::vector<Scalar> mass_action_rates(const ReactionNetwork& net, std::span<const Scalar> x,
                                      std::span<const Scalar> kappa) {
  if (x.size() != net.num_species()) throw DimensionError("state length does not match species count");
  if (kappa.size() != net.num_reactions())
    throw DimensionError("rate vector length does not match reaction count");
  std::vector<Scalar> v;
  v.reserve(net.num_reactions());
  for (std::size_t j = 0; j < net.num_reactions(); ++j)
    v.push_back(kappa[j] * monomial<Scalar>(x, net.source(j)));
  return v;
}

/// dx/dt = N v(x).
template <class Scalar>
std::vector<Scalar> ode_rhs(const ReactionNetwork& net, std::span<const Scalar> x,
                            std::span<const Scalar> kappa) {
  auto v = mass_action_rates<Scalar>(net, x, kappa);
  return net.stoichiometric_matrix().apply<Scalar>(std::span<const Scalar>(v));
}

}  // namespace crn
