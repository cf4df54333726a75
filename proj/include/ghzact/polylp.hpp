#pragma once

// Exact rational linear programming and polyhedral computation.

#include <optional>
#include <stdexcept>
#include <vector>

#include "ghzact/linear_system.hpp"

namespace ghzact {

class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Finds y >= 0 with A y = b by phase-1 simplex under Bland's rule.
/// `a` is rows × cols, `b` has `rows` entries.
std::optional<std::vector<Rational>> solve_nonnegative(const RMatrix& a, const std::vector<Rational>& b);

struct LpResult {
  bool feasible = false;
  /// Feasible: a point satisfying every row.
  std::vector<Rational> point;
  /// Infeasible: y >= 0 with Σ y_i a_i = 0 and Σ y_i c_i = 1, i.e. 1 <= 0.
  std::vector<Rational> multipliers;
};

LpResult lp_feasible(const LinearSystem& system);
/// Exact re-check of an LpResult against the system.
bool verify(const LpResult& result, const LinearSystem& system);

struct Polyhedron {
  std::vector<std::vector<Rational>> vertices;
  std::vector<std::vector<Rational>> rays;
  std::vector<std::vector<Rational>> lineality;

  bool empty() const { return vertices.empty(); }
  bool is_single_point() const { return vertices.size() == 1 && rays.empty() && lineality.empty(); }
};

/// Default guard on the number of variables accepted by enumerate_polyhedron.
/// Overridden by the ARTIFACT_MAX_DIM environment variable.
std::size_t max_enumeration_dim();

/// V-representation by the double description method. Throws GuardExceeded
/// above `max_dim` variables or when intermediate ray counts explode.
Polyhedron enumerate_polyhedron(const LinearSystem& system, std::size_t max_dim = max_enumeration_dim());
/// H-representation of the V-form (facets via double description on the
/// polar cone), over the given variable names.
LinearSystem h_form(const Polyhedron& poly, const std::vector<std::string>& variables);
/// Every generator satisfies the (homogenized) inequalities.
bool generators_satisfy(const Polyhedron& poly, const LinearSystem& system);

/// Scales a non-zero vector to the primitive integer vector with the same direction.
std::vector<Rational> primitive_direction(std::vector<Rational> v);

/// Non-negative multipliers with Σ y_i (a_i·x + c_i) + slack·(−1) ≡ target.
struct FarkasCertificate {
  std::vector<Rational> multipliers;
  Rational slack = 0;
  LinearInequality target;
};

std::optional<FarkasCertificate> farkas_combination(const LinearInequality& target, const LinearSystem& system);
/// Coefficient-by-coefficient recombination check.
bool recombines(const FarkasCertificate& cert, const LinearSystem& system);

}  // namespace ghzact
