#pragma once

// H-form inequality systems a·x + c <= 0 over a named variable universe.

#include <string>
#include <vector>

#include "ghzact/exactmat.hpp"

namespace ghzact {

struct LinearInequality {
  std::vector<Rational> coefficients;
  Rational constant = 0;

  Rational evaluate(std::span<const Rational> point) const;
  bool satisfied_by(std::span<const Rational> point) const { return evaluate(point) <= 0; }
  /// Divides by the absolute value of the leading non-zero coefficient (or of
  /// the constant when every coefficient vanishes).
  LinearInequality canonical() const;
  bool is_trivial() const;

  friend bool operator==(const LinearInequality&, const LinearInequality&) = default;
};

class LinearSystem {
 public:
  LinearSystem() = default;
  explicit LinearSystem(std::vector<std::string> variables) : variables_(std::move(variables)) {}

  const std::vector<std::string>& variables() const { return variables_; }
  std::size_t dimension() const { return variables_.size(); }
  std::size_t size() const { return rows_.size(); }
  const LinearInequality& row(std::size_t i) const { return rows_[i]; }
  const std::vector<LinearInequality>& rows() const { return rows_; }
  const std::string& tag(std::size_t i) const { return tags_[i]; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  /// Number of add() calls, duplicates included.
  std::size_t raw_count() const { return raw_count_; }

  /// Adds the canonical form; returns false when it duplicates an existing row.
  bool add(const LinearInequality& ineq, const std::string& tag = "", const std::string& label = "");
  /// Convenience: coefficients given by variable name.
  bool add(const std::vector<std::pair<std::string, Rational>>& terms, const Rational& constant,
           const std::string& tag = "", const std::string& label = "");
  /// |Σ a_i x_i| + Σ b_j y_j + c <= 0 becomes the two plain inequalities.
  void add_absolute(const std::vector<std::pair<std::string, Rational>>& inside,
                    const std::vector<std::pair<std::string, Rational>>& outside, const Rational& constant,
                    const std::string& tag, const std::string& label);

  std::size_t variable_index(const std::string& name) const;
  bool satisfied_by(std::span<const Rational> point) const;
  /// Indices of violated rows.
  std::vector<std::size_t> violations(std::span<const Rational> point) const;
  /// Canonical rows as a sorted list, for set comparison of systems.
  std::vector<LinearInequality> canonical_set() const;

 private:
  std::vector<std::string> variables_;
  std::vector<LinearInequality> rows_;
  std::vector<std::string> tags_;
  std::vector<std::string> labels_;
  std::size_t raw_count_ = 0;
};

/// Plain-text H-form: "vars: a b c" header then one "c a1 … an <= 0" per line.
std::string to_h_text(const LinearSystem& system);
LinearSystem parse_h_text(const std::string& text);

}  // namespace ghzact
