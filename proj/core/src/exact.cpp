#include "crn/exact.hpp"

#include <cctype>
#include <cmath>

#include "crn/errors.hpp"

namespace crn {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Integer pow10(unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw ParseError("empty number");

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  Rational result;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw ParseError("malformed rational '" + std::string(text) + "'");
    Integer d{std::string(den), 10};
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    result = Rational(Integer(std::string(num), 10), d);
  } else {
    std::string_view mantissa = s;
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
      mantissa = s.substr(0, e);
      auto exp_text = std::string(s.substr(e + 1));
      std::size_t start = (!exp_text.empty() && (exp_text[0] == '+' || exp_text[0] == '-')) ? 1 : 0;
      if (!all_digits(std::string_view(exp_text).substr(start)) || exp_text.size() > 8)
        throw ParseError("malformed exponent in '" + std::string(text) + "'");
      exponent = std::stol(exp_text);
    }
    std::string digits;
    long fraction_digits = 0;
    if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
      auto whole = mantissa.substr(0, dot);
      auto frac = mantissa.substr(dot + 1);
      if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
          (whole.empty() && frac.empty()))
        throw ParseError("malformed decimal '" + std::string(text) + "'");
      digits = std::string(whole) + std::string(frac);
      fraction_digits = static_cast<long>(frac.size());
    } else {
      if (!all_digits(mantissa)) throw ParseError("malformed number '" + std::string(text) + "'");
      digits = std::string(mantissa);
    }
    Integer value(digits, 10);
    long scale = exponent - fraction_digits;
    if (scale >= 0) {
      result = Rational(value * pow10(static_cast<unsigned long>(scale)));
    } else {
      result = Rational(value, pow10(static_cast<unsigned long>(-scale)));
    }
  }
  result.canonicalize();
  if (negative) result = -result;
  return result;
}

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

double to_double(const Rational& q) { return q.get_d(); }

double log_of(const Rational& q) {
  if (sgn(q) <= 0) throw DomainError("logarithm of a nonpositive rational");
  auto log_int = [](const Integer& z) {
    long exp = 0;
    double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
  };
  return log_int(q.get_num()) - log_int(q.get_den());
}

RationalMatrix to_rational(const IntMatrix& m) {
  RationalMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = Rational(m(r, c));
  return out;
}

RowEchelon reduced_row_echelon(RationalMatrix m) {
  RowEchelon out;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < m.rows() && m(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != pivot_row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(pivot_row, c));
    Rational inv = 1 / m(pivot_row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(pivot_row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == pivot_row || m(r, col) == 0) continue;
      Rational factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(pivot_row, c);
    }
    out.pivot_columns.push_back(col);
    ++pivot_row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const RationalMatrix& m) { return reduced_row_echelon(m).pivot_columns.size(); }

std::size_t rank(const IntMatrix& m) { return rank(to_rational(m)); }

std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m) {
  auto ech = reduced_row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : ech.pivot_columns) is_pivot[c] = true;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(m.cols(), Rational(0));
    v[free] = 1;
    for (std::size_t k = 0; k < ech.pivot_columns.size(); ++k)
      v[ech.pivot_columns[k]] = -ech.reduced(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Integer> primitive_integer_vector(std::span<const Rational> v) {
  Integer lcm = 1;
  for (const auto& q : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
  std::vector<Integer> out;
  out.reserve(v.size());
  Integer content = 0;
  for (const auto& q : v) {
    Integer z = q.get_num() * (lcm / q.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z.get_mpz_t());
    out.push_back(std::move(z));
  }
  if (content > 1)
    for (auto& z : out) z /= content;
  for (const auto& z : out) {
    if (z == 0) continue;
    if (z < 0)
      for (auto& w : out) w = -w;
    break;
  }
  return out;
}

std::vector<std::vector<Integer>> integer_nullspace(const IntMatrix& m) {
  std::vector<std::vector<Integer>> out;
  for (const auto& v : nullspace(to_rational(m))) out.push_back(primitive_integer_vector(v));
  return out;
}

Integer determinant(IntMatrix m) {
  // Bareiss fraction-free elimination.
  if (m.rows() != m.cols()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  int sign = 1;
  Integer previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t sel = k + 1;
      while (sel < n && m(sel, k) == 0) ++sel;
      if (sel == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(m(sel, c), m(k, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
        m(i, j) = std::move(t);
      }
    }
    previous = m(k, k);
  }
  Integer det = m(n - 1, n - 1);
  return sign < 0 ? Integer(-det) : det;
}

Rational determinant(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("determinant of a non-square matrix");
  IntMatrix scaled(m.rows(), m.cols());
  Integer scale = 1;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer lcm = 1;
    for (std::size_t c = 0; c < m.cols(); ++c)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c)
      scaled(r, c) = m(r, c).get_num() * (lcm / m(r, c).get_den());
    scale *= lcm;
  }
  Rational det(determinant(std::move(scaled)), scale);
  det.canonicalize();
  return det;
}

bool in_column_span(const RationalMatrix& m, std::span<const Rational> v) {
  if (v.size() != m.rows()) throw DimensionError("vector length does not match matrix rows");
  RationalMatrix augmented(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) augmented(r, c) = m(r, c);
    augmented(r, m.cols()) = v[r];
  }
  return rank(augmented) == rank(m);
}

}  // namespace crn
