#pragma once

// Sparse multivariate polynomials with integer coefficients in the rate
// constants k1..kp.

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "crn/exact.hpp"

namespace crn {

using Exponents = std::vector<unsigned>;

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::size_t num_vars) : vars_(num_vars) {}

  static Polynomial constant(std::size_t num_vars, const Integer& c);
  static Polynomial variable(std::size_t num_vars, std::size_t index);
  static Polynomial monomial(const Exponents& e, const Integer& c = 1);

  [[nodiscard]] std::size_t num_vars() const { return vars_; }
  [[nodiscard]] const std::map<Exponents, Integer>& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t num_terms() const { return terms_.size(); }

  void add_term(const Exponents& e, const Integer& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  [[nodiscard]] Polynomial pow(unsigned e) const;

  /// Largest monomial dividing every term (coefficient 1).
  [[nodiscard]] Exponents monomial_gcd() const;
  /// Exact division by a monomial that divides every term.
  [[nodiscard]] Polynomial divide_monomial(const Exponents& e) const;

  [[nodiscard]] Rational evaluate(std::span<const Rational> x) const;
  [[nodiscard]] double evaluate(std::span<const double> x) const;

  /// E.g. "k1*k3^2 + 2*k4". Terms in descending lexicographic exponent order.
  [[nodiscard]] std::string to_string(const std::string& var_prefix = "k") const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t vars_ = 0;
  std::map<Exponents, Integer> terms_;
};

std::string format_monomial(const Exponents& e, const std::string& var_prefix = "k");

}  // namespace crn
