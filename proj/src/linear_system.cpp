#include "ghzact/linear_system.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ghzact {

Rational LinearInequality::evaluate(std::span<const Rational> point) const {
  if (point.size() != coefficients.size()) throw std::invalid_argument("point dimension does not match inequality");
  Rational s = constant;
  for (std::size_t i = 0; i < point.size(); ++i)
    if (coefficients[i] != 0) s += coefficients[i] * point[i];
  return s;
}

LinearInequality LinearInequality::canonical() const {
  Rational scale = 0;
  for (const auto& a : coefficients)
    if (a != 0) {
      scale = abs(a);
      break;
    }
  if (scale == 0) scale = abs(constant);
  if (scale == 0 || scale == 1) return *this;
  LinearInequality out = *this;
  for (auto& a : out.coefficients) a /= scale;
  out.constant /= scale;
  return out;
}

bool LinearInequality::is_trivial() const {
  return std::all_of(coefficients.begin(), coefficients.end(), [](const Rational& a) { return a == 0; }) &&
         constant <= 0;
}

bool LinearSystem::add(const LinearInequality& ineq, const std::string& tag, const std::string& label) {
  if (ineq.coefficients.size() != variables_.size())
    throw std::invalid_argument("inequality dimension does not match the variable universe");
  ++raw_count_;
  LinearInequality c = ineq.canonical();
  if (std::find(rows_.begin(), rows_.end(), c) != rows_.end()) return false;
  rows_.push_back(std::move(c));
  tags_.push_back(tag);
  labels_.push_back(label);
  return true;
}

bool LinearSystem::add(const std::vector<std::pair<std::string, Rational>>& terms, const Rational& constant,
                       const std::string& tag, const std::string& label) {
  LinearInequality ineq;
  ineq.coefficients.assign(variables_.size(), Rational(0));
  ineq.constant = constant;
  for (const auto& [name, value] : terms) ineq.coefficients[variable_index(name)] += value;
  return add(ineq, tag, label);
}

void LinearSystem::add_absolute(const std::vector<std::pair<std::string, Rational>>& inside,
                                const std::vector<std::pair<std::string, Rational>>& outside,
                                const Rational& constant, const std::string& tag, const std::string& label) {
  for (int sign : {1, -1}) {
    auto terms = outside;
    for (const auto& [name, value] : inside) terms.emplace_back(name, sign * value);
    add(terms, constant, tag, label + (sign > 0 ? "[+]" : "[-]"));
  }
}

std::size_t LinearSystem::variable_index(const std::string& name) const {
  auto it = std::find(variables_.begin(), variables_.end(), name);
  if (it == variables_.end()) throw std::invalid_argument("unknown variable: " + name);
  return static_cast<std::size_t>(it - variables_.begin());
}

bool LinearSystem::satisfied_by(std::span<const Rational> point) const {
  return std::all_of(rows_.begin(), rows_.end(), [&](const LinearInequality& r) { return r.satisfied_by(point); });
}

std::vector<std::size_t> LinearSystem::violations(std::span<const Rational> point) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (!rows_[i].satisfied_by(point)) out.push_back(i);
  return out;
}

std::vector<LinearInequality> LinearSystem::canonical_set() const {
  auto out = rows_;
  auto less = [](const LinearInequality& a, const LinearInequality& b) {
    if (a.constant != b.constant) return a.constant < b.constant;
    return std::lexicographical_compare(a.coefficients.begin(), a.coefficients.end(), b.coefficients.begin(),
                                        b.coefficients.end());
  };
  std::sort(out.begin(), out.end(), less);
  return out;
}

std::string to_h_text(const LinearSystem& system) {
  std::ostringstream os;
  os << "vars:";
  for (const auto& v : system.variables()) os << ' ' << v;
  os << '\n';
  for (const auto& row : system.rows()) {
    os << to_string(row.constant);
    for (const auto& a : row.coefficients) os << ' ' << to_string(a);
    os << " <= 0\n";
  }
  return os.str();
}

LinearSystem parse_h_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> vars;
  bool have_vars = false;
  std::vector<std::vector<std::string>> rows;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    for (std::string t; ls >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;
    if (tokens[0] == "vars:") {
      if (have_vars) throw std::invalid_argument("duplicate vars: header");
      vars.assign(tokens.begin() + 1, tokens.end());
      have_vars = true;
      continue;
    }
    if (tokens.size() < 3 || (tokens[tokens.size() - 2] != "<=" && tokens[tokens.size() - 2] != "≤") ||
        tokens.back() != "0")
      throw std::invalid_argument("line " + std::to_string(lineno) + ": expected 'c a1 ... an <= 0'");
    tokens.resize(tokens.size() - 2);
    rows.push_back(std::move(tokens));
  }
  if (!have_vars) {
    if (rows.empty()) return LinearSystem{};
    for (std::size_t i = 1; i < rows.front().size(); ++i) vars.push_back("x" + std::to_string(i));
  }
  LinearSystem sys(vars);
  for (const auto& r : rows) {
    if (r.size() != vars.size() + 1)
      throw std::invalid_argument("inequality has " + std::to_string(r.size() - 1) + " coefficients, expected " +
                                  std::to_string(vars.size()));
    LinearInequality ineq;
    ineq.constant = parse_rational(r[0]);
    for (std::size_t i = 1; i < r.size(); ++i) ineq.coefficients.push_back(parse_rational(r[i]));
    sys.add(ineq, "input");
  }
  return sys;
}

}  // namespace ghzact
