#include "crn/network.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace crn {

RateValue::RateValue(std::string symbol) : value_(std::move(symbol)) {
  const auto& s = std::get<std::string>(value_);
  if (s.empty()) throw ValidationError("empty rate symbol");
}

RateValue::RateValue(Rational value) : value_(std::move(value)) {
  if (sgn(std::get<Rational>(value_)) <= 0) throw DomainError("rate constants must be positive");
}

RateValue::RateValue(double value) : value_(value) {
  if (!(value > 0) || !std::isfinite(value)) throw DomainError("rate constants must be positive");
}

double RateValue::as_double() const {
  if (is_double()) return std::get<double>(value_);
  if (is_rational()) return rational().get_d();
  throw DomainError("rate '" + symbol() + "' has no numeric value");
}

std::string RateValue::to_string() const {
  if (is_symbolic()) return symbol();
  if (is_rational()) return crn::to_string(rational());
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", std::get<double>(value_));
  return buf;
}

ReactionNetwork::ReactionNetwork(std::vector<std::string> species, std::vector<Complex> complexes,
                                 std::vector<Reaction> reactions)
    : species_(std::move(species)), complexes_(std::move(complexes)), reactions_(std::move(reactions)) {
  const std::size_t n = species_.size();
  std::set<std::string> names;
  for (const auto& s : species_) {
    if (s.empty()) throw ValidationError("empty species name");
    if (!names.insert(s).second) throw ValidationError("duplicate species '" + s + "'");
  }
  std::set<Complex> seen;
  for (const auto& c : complexes_) {
    if (c.size() != n) throw DimensionError("complex length does not match species count");
    for (int e : c)
      if (e < 0) throw ValidationError("negative stoichiometric coefficient");
    if (!seen.insert(c).second) throw ValidationError("duplicate complex in complex list");
  }
  std::vector<bool> complex_used(complexes_.size(), false);
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < reactions_.size(); ++j) {
    const auto& r = reactions_[j];
    if (r.source >= complexes_.size() || r.target >= complexes_.size())
      throw ValidationError("reaction " + std::to_string(j + 1) + " refers to an unknown complex");
    if (r.source == r.target)
      throw ValidationError("reaction " + std::to_string(j + 1) + " is a self-loop");
    if (!pairs.emplace(r.source, r.target).second)
      throw ValidationError("reaction " + std::to_string(j + 1) + " duplicates an earlier reaction");
    complex_used[r.source] = complex_used[r.target] = true;
  }
  for (std::size_t k = 0; k < complexes_.size(); ++k)
    if (!complex_used[k]) throw ValidationError("complex " + std::to_string(k + 1) + " occurs in no reaction");
  for (std::size_t i = 0; i < n; ++i) {
    bool present = false;
    for (const auto& c : complexes_) present = present || c[i] > 0;
    if (!present) throw ValidationError("species '" + species_[i] + "' occurs in no complex");
  }

  stoichiometry_ = IntMatrix(n, reactions_.size());
  for (std::size_t j = 0; j < reactions_.size(); ++j)
    for (std::size_t i = 0; i < n; ++i)
      stoichiometry_(i, j) = complexes_[reactions_[j].target][i] - complexes_[reactions_[j].source][i];
  rank_ = crn::rank(stoichiometry_);
}

std::optional<std::size_t> ReactionNetwork::species_index(std::string_view name) const {
  for (std::size_t i = 0; i < species_.size(); ++i)
    if (species_[i] == name) return i;
  return std::nullopt;
}

std::optional<std::size_t> ReactionNetwork::complex_index(const Complex& c) const {
  for (std::size_t k = 0; k < complexes_.size(); ++k)
    if (complexes_[k] == c) return k;
  return std::nullopt;
}

std::optional<std::size_t> ReactionNetwork::reaction_index(std::size_t source, std::size_t target) const {
  for (std::size_t j = 0; j < reactions_.size(); ++j)
    if (reactions_[j].source == source && reactions_[j].target == target) return j;
  return std::nullopt;
}

IntMatrix ReactionNetwork::complex_matrix() const {
  IntMatrix y(species_.size(), complexes_.size());
  for (std::size_t k = 0; k < complexes_.size(); ++k)
    for (std::size_t i = 0; i < species_.size(); ++i) y(i, k) = complexes_[k][i];
  return y;
}

std::optional<std::vector<Rational>> ReactionNetwork::rational_rates() const {
  std::vector<Rational> out;
  for (const auto& r : reactions_) {
    if (!r.rate.is_rational()) return std::nullopt;
    out.push_back(r.rate.rational());
  }
  return out;
}

std::optional<std::vector<double>> ReactionNetwork::double_rates() const {
  std::vector<double> out;
  for (const auto& r : reactions_) {
    if (r.rate.is_symbolic()) return std::nullopt;
    out.push_back(r.rate.as_double());
  }
  return out;
}

ReactionNetwork ReactionNetwork::with_rates(std::span<const RateValue> rates) const {
  if (rates.size() != reactions_.size()) throw DimensionError("rate vector length does not match reaction count");
  auto reactions = reactions_;
  for (std::size_t j = 0; j < reactions.size(); ++j) reactions[j].rate = rates[j];
  return ReactionNetwork(species_, complexes_, std::move(reactions));
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.'; }

bool is_identifier(std::string_view s) {
  if (s.empty() || !is_name_start(s.front())) return false;
  for (char c : s)
    if (!is_name_char(c)) return false;
  return true;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

class Parser {
 public:
  ReactionNetwork parse(std::string_view text) {
    std::size_t line_no = 0;
    for (auto raw : split(text, '\n')) {
      ++line_no;
      line_ = line_no;
      auto line = raw;
      if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
      line = trim(line);
      if (line.empty()) continue;
      if (line.starts_with("species:")) {
        declare_species(line.substr(8));
      } else {
        parse_reaction(line);
      }
    }
    if (reactions_.empty()) throw ParseError("network has no reactions");

    std::vector<Complex> complexes;
    for (auto& terms : raw_complexes_) {
      Complex c(species_.size(), 0);
      for (auto [i, coeff] : terms) c[i] += coeff;
      complexes.push_back(std::move(c));
    }
    try {
      return ReactionNetwork(species_, std::move(complexes), std::move(reactions_));
    } catch (const ValidationError& e) {
      throw ParseError(e.what());
    }
  }

 private:
  using Terms = std::map<std::size_t, int>;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("line " + std::to_string(line_) + ": " + msg);
  }

  void declare_species(std::string_view rest) {
    if (declared_) fail("species declared twice");
    if (!reactions_.empty()) fail("species line must precede the reactions");
    declared_ = true;
    std::istringstream in{std::string(rest)};
    std::string name;
    while (in >> name) {
      if (!is_identifier(name)) fail("invalid species name '" + name + "'");
      for (const auto& s : species_)
        if (s == name) fail("duplicate species '" + name + "'");
      species_.push_back(name);
    }
    if (species_.empty()) fail("empty species declaration");
  }

  std::size_t species_for(std::string_view name) {
    for (std::size_t i = 0; i < species_.size(); ++i)
      if (species_[i] == name) return i;
    if (declared_) fail("undeclared species '" + std::string(name) + "'");
    species_.emplace_back(name);
    return species_.size() - 1;
  }

  std::size_t parse_complex(std::string_view text) {
    text = trim(text);
    if (text.empty()) fail("empty complex");
    Terms terms;
    if (text != "0") {
      for (auto term : split(text, '+')) {
        term = trim(term);
        if (term.empty()) fail("malformed stoichiometric term in '" + std::string(text) + "'");
        std::size_t digits = 0;
        while (digits < term.size() && std::isdigit(static_cast<unsigned char>(term[digits]))) ++digits;
        int coeff = 1;
        if (digits > 0) {
          if (digits > 6) fail("stoichiometric coefficient too large in '" + std::string(term) + "'");
          coeff = std::stoi(std::string(term.substr(0, digits)));
          if (coeff <= 0) fail("stoichiometric coefficient must be positive in '" + std::string(term) + "'");
        }
        auto name = trim(term.substr(digits));
        if (!is_identifier(name)) fail("malformed stoichiometric term '" + std::string(term) + "'");
        terms[species_for(name)] += coeff;
      }
    }
    for (std::size_t k = 0; k < raw_complexes_.size(); ++k)
      if (raw_complexes_[k] == terms) return k;
    raw_complexes_.push_back(std::move(terms));
    return raw_complexes_.size() - 1;
  }

  RateValue parse_rate(std::string_view text, std::size_t index) {
    text = trim(text);
    if (text.empty()) return RateValue("k" + std::to_string(index + 1));
    if (is_identifier(text)) return RateValue(std::string(text));
    Rational q;
    try {
      q = parse_rational(text);
    } catch (const ParseError& e) {
      fail(std::string("bad rate: ") + e.what());
    }
    if (sgn(q) <= 0) fail("nonpositive rate constant '" + std::string(text) + "'");
    return RateValue(q);
  }

  void parse_reaction(std::string_view line) {
    auto body = line;
    if (auto colon = line.find(':'); colon != std::string_view::npos) {
      auto label = trim(line.substr(0, colon));
      if (!is_identifier(label)) fail("invalid reaction label '" + std::string(label) + "'");
      body = line.substr(colon + 1);
    }
    std::string_view rates;
    if (auto at = body.find('@'); at != std::string_view::npos) {
      rates = body.substr(at + 1);
      body = body.substr(0, at);
    }
    bool reversible = false;
    std::size_t arrow = body.find("<=>");
    std::size_t arrow_len = 3;
    if (arrow != std::string_view::npos) {
      reversible = true;
    } else {
      arrow = body.find("->");
      arrow_len = 2;
      if (arrow == std::string_view::npos) fail("missing reaction arrow");
    }
    auto lhs = body.substr(0, arrow);
    auto rhs = body.substr(arrow + arrow_len);
    if (rhs.find("->") != std::string_view::npos || rhs.find("<=>") != std::string_view::npos)
      fail("more than one reaction arrow");
    std::size_t source = parse_complex(lhs);
    std::size_t target = parse_complex(rhs);

    std::string_view forward_rate = rates;
    std::string_view reverse_rate;
    if (reversible) {
      auto parts = split(rates, ',');
      if (parts.size() > 2) fail("reversible reaction takes at most two rates");
      forward_rate = parts[0];
      if (parts.size() == 2) reverse_rate = parts[1];
      else if (!trim(rates).empty()) fail("reversible reaction needs forward and reverse rates");
    } else if (rates.find(',') != std::string_view::npos) {
      fail("irreversible reaction takes one rate");
    }
    if (source == target) fail("self-loop y -> y is not a reaction");
    add_reaction(source, target, parse_rate(forward_rate, reactions_.size()));
    if (reversible) add_reaction(target, source, parse_rate(reverse_rate, reactions_.size()));
  }

  void add_reaction(std::size_t source, std::size_t target, RateValue rate) {
    for (std::size_t k = 0; k < reactions_.size(); ++k)
      if (reactions_[k].source == source && reactions_[k].target == target)
        fail("duplicate reaction (same as reaction " + std::to_string(k + 1) + ")");
    reactions_.push_back({source, target, std::move(rate)});
  }

  std::size_t line_ = 0;
  bool declared_ = false;
  std::vector<std::string> species_;
  std::vector<Terms> raw_complexes_;
  std::vector<Reaction> reactions_;
};

}  // namespace

ReactionNetwork parse_network(std::string_view text) { return Parser{}.parse(text); }

NetworkPtr load_network(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return std::make_shared<const ReactionNetwork>(parse_network(buf.str()));
}

std::string format_complex(const ReactionNetwork& net, const Complex& c) {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += " + ";
    if (c[i] != 1) out += std::to_string(c[i]) + " ";
    out += net.species()[i];
  }
  return out.empty() ? "0" : out;
}

std::string format_network(const ReactionNetwork& net) {
  std::string out = "species:";
  for (const auto& s : net.species()) out += " " + s;
  out += "\n";
  for (std::size_t j = 0; j < net.num_reactions(); ++j) {
    out += "r" + std::to_string(j + 1) + ": " + format_complex(net, net.source(j)) + " -> " +
           format_complex(net, net.target(j)) + " @ " + net.reactions()[j].rate.to_string() + "\n";
  }
  return out;
}

}  // namespace crn
