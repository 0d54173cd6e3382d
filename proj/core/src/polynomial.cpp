#include "crn/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include "crn/errors.hpp"

namespace crn {

Polynomial Polynomial::constant(std::size_t num_vars, const Integer& c) {
  Polynomial p(num_vars);
  p.add_term(Exponents(num_vars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t num_vars, std::size_t index) {
  Exponents e(num_vars, 0);
  e.at(index) = 1;
  return monomial(e);
}

Polynomial Polynomial::monomial(const Exponents& e, const Integer& c) {
  Polynomial p(e.size());
  p.add_term(e, c);
  return p;
}

void Polynomial::add_term(const Exponents& e, const Integer& c) {
  if (e.size() != vars_) throw DimensionError("monomial has the wrong number of variables");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.vars_ != vars_) throw DimensionError("polynomials over different variable sets");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.vars_ != vars_) throw DimensionError("polynomials over different variable sets");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.vars_ != b.vars_) throw DimensionError("polynomials over different variable sets");
  Polynomial out(a.vars_);
  Exponents e(a.vars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(vars_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

Exponents Polynomial::monomial_gcd() const {
  if (terms_.empty()) return Exponents(vars_, 0);
  Exponents g = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < vars_; ++i) g[i] = std::min(g[i], e[i]);
  return g;
}

Polynomial Polynomial::divide_monomial(const Exponents& d) const {
  if (d.size() != vars_) throw DimensionError("monomial has the wrong number of variables");
  Polynomial out(vars_);
  for (const auto& [e, c] : terms_) {
    Exponents q = e;
    for (std::size_t i = 0; i < vars_; ++i) {
      if (q[i] < d[i]) throw DomainError("monomial does not divide the polynomial");
      q[i] -= d[i];
    }
    out.add_term(q, c);
  }
  return out;
}

Rational Polynomial::evaluate(std::span<const Rational> x) const {
  if (x.size() != vars_) throw DimensionError("evaluation point has the wrong dimension");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < vars_; ++i) {
      if (e[i] == 0) continue;
      Rational pw;
      mpz_pow_ui(pw.get_num_mpz_t(), x[i].get_num_mpz_t(), e[i]);
      mpz_pow_ui(pw.get_den_mpz_t(), x[i].get_den_mpz_t(), e[i]);
      t *= pw;
    }
    sum += t;
  }
  return sum;
}

double Polynomial::evaluate(std::span<const double> x) const {
  if (x.size() != vars_) throw DimensionError("evaluation point has the wrong dimension");
  double sum = 0;
  for (const auto& [e, c] : terms_) {
    double t = c.get_d();
    for (std::size_t i = 0; i < vars_; ++i)
      if (e[i] != 0) t *= std::pow(x[i], static_cast<double>(e[i]));
    sum += t;
  }
  return sum;
}

std::string format_monomial(const Exponents& e, const std::string& var_prefix) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += var_prefix + std::to_string(i + 1);
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

std::string Polynomial::to_string(const std::string& var_prefix) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Integer mag = abs(c);
    const bool is_one = std::all_of(e.begin(), e.end(), [](unsigned v) { return v == 0; });
    std::string term;
    if (is_one) term = mag.get_str();
    else if (mag == 1) term = format_monomial(e, var_prefix);
    else term = mag.get_str() + "*" + format_monomial(e, var_prefix);
    if (out.empty()) out = (c < 0 ? "-" : "") + term;
    else out += (c < 0 ? " - " : " + ") + term;
  }
  return out;
}

}  // namespace crn
