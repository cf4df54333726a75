// One PASS/FAIL line per acceptance criterion. Exit status 0 iff every
// selected criterion passes.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ghzact/activation.hpp"
#include "ghzact/channels.hpp"
#include "ghzact/checks.hpp"
#include "ghzact/depolarize.hpp"
#include "ghzact/lemmas.hpp"
#include "ghzact/polylp.hpp"
#include "ghzact/random.hpp"
#include "ghzact/seesaw.hpp"

using namespace ghzact;

namespace {

// Pinned tolerances and budgets.
constexpr double kSeesawOneTol = 1e-6;
constexpr double kSeesawHalfTol = 1e-6;
constexpr double kMonotoneSlack = 1e-12;
constexpr double kDepolarizeBudgetS = 10.0;
constexpr double kLemma1BudgetS = 60.0;
constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome criterion1() {
  const auto t0 = std::chrono::steady_clock::now();
  Rng rng(kSeed);
  bool fixed = true;
  std::size_t agree = 0, total = 0, pauli_only_agree = 0;
  for (std::size_t n = 2; n <= 5; ++n) {
    const std::size_t d = std::size_t{1} << n;
    const RMatrix id = RMatrix::identity(d), phi = ghz_projector(n);
    fixed = fixed && delta_closed(id, n) == id && delta_closed(phi, n) == phi && delta_protocol(id, n) == id &&
            delta_protocol(phi, n) == phi;
    for (int t = 0; t < 25; ++t) {
      const RMatrix rho = random_state(d, rng);
      const DepolarizeReport r = depolarize_report(rho, n);
      ++total;
      if (r.consistent()) ++agree;
      if (r.closed_form_output == r.pauli_steps_output) ++pauli_only_agree;
    }
  }
  const double secs = seconds_since(t0);
  std::ostringstream os;
  os << "fixed points N=2..5 " << (fixed ? "exact" : "BROKEN") << "; closed form = protocol on " << agree << "/" << total
     << " random states (Pauli steps alone: " << pauli_only_agree << "/" << total << "); " << secs << " s of "
     << kDepolarizeBudgetS << " s";
  return {fixed && agree == total && secs < kDepolarizeBudgetS, os.str()};
}

Outcome criterion2() {
  bool ok = true;
  std::ostringstream os;
  for (std::size_t n = 2; n <= 4; ++n) {
    const Report r = check_jamiolkowski(n);
    ok = ok && r.status == Status::pass;
    os << "N=" << n << (r.status == Status::pass ? " equal" : " differs") << (n < 4 ? "; " : "");
  }
  return {ok, os.str()};
}

Outcome criterion3() {
  bool ok = true;
  std::ostringstream os;
  for (std::size_t n = 2; n <= 3; ++n) {
    const Report r = check_ppt(n, 60, kSeed + n);
    ok = ok && r.status == Status::pass;
    os << "N=" << n << ": " << r.details["disagreements"].get<std::size_t>() << " disagreements over "
       << r.details["subset_checks"].get<std::size_t>() << " subset checks (" << r.details["ppt_matrices"].get<std::size_t>()
       << "/60 PPT)" << (n < 3 ? "; " : "");
  }
  return {ok, os.str()};
}

Outcome criterion4() {
  const std::vector<Rational> lambdas{Rational(51, 100), Rational(3, 4), Rational(9, 10), Rational(99, 100)};
  std::vector<std::string> failed;
  std::size_t certs = 0, cert_total = 0;
  double slowest = 0;
  for (std::size_t n = 2; n <= 4; ++n)
    for (const auto& l : lambdas) {
      const auto t0 = std::chrono::steady_clock::now();
      const LambdaParam lambda(l);
      const UniquenessReport u = verify_unique_solution(n, lambda);
      const LinearSystem sys = reduced_system(n, lambda);
      bool all = true;
      for (const auto& c : u.certificates) {
        ++cert_total;
        if (c && recombines(*c, sys))
          ++certs;
        else
          all = false;
      }
      const double secs = seconds_since(t0);
      slowest = std::max(slowest, secs);
      if (!u.enumeration_unique || !u.polyhedron.rays.empty() || !all || secs >= kLemma1BudgetS) {
        std::ostringstream f;
        f << "(N=" << n << ", " << to_string(l) << ": " << u.polyhedron.vertices.size() << "v/" << u.polyhedron.rays.size()
          << "r)";
        failed.push_back(f.str());
      }
    }
  std::ostringstream os;
  os << 12 - failed.size() << "/12 (N, lambda) unique at Theta_sol; " << certs << "/" << cert_total
     << " certificates recombine; slowest " << slowest << " s of " << kLemma1BudgetS << " s";
  if (!failed.empty()) {
    os << "; failing:";
    for (const auto& f : failed) os << " " << f;
  }
  return {failed.empty(), os.str()};
}

Outcome criterion5() {
  const ConeReport two = half_lambda_cone(2), three = half_lambda_cone(3);
  std::ostringstream os;
  os << "N=2: " << two.polyhedron.vertices.size() << " vertices, " << two.polyhedron.rays.size()
     << " rays, rays equal generators " << (two.rays_equal_generators ? "yes" : "no") << ", fixed output "
     << (two.fixed_output ? "yes" : "no") << "; N=3: " << three.polyhedron.vertices.size() << " vertex, "
     << three.polyhedron.rays.size() << " rays, matches N=2 set " << (three.matches_two_party_cone.value_or(false) ? "yes" : "no")
     << ", fixed output " << (three.fixed_output ? "yes" : "no");
  const bool ok = two.vertex_is_sol && two.polyhedron.vertices.size() == 1 && two.rays_equal_generators &&
                  two.fixed_output && three.fixed_output && three.matches_two_party_cone.value_or(false);
  return {ok, os.str()};
}

Outcome criterion6() {
  const Report r = check_filter_identity(2, 20, 10, kSeed);
  std::ostringstream os;
  os << r.details["failures"].get<std::size_t>() << " failures over 20 triples x 10 Z; nu = "
     << r.details["observed_nu"].dump() << " (expected " << r.details["expected_nu"].get<std::string>() << ")";
  return {r.status == Status::pass, os.str()};
}

Outcome criterion7() {
  const Report r = check_witness_consistency(2, 24, kSeed);
  std::ostringstream os;
  os << r.details["failures"].get<std::size_t>() << " mismatches over 24 instances ("
     << r.details["negative_values"].get<std::size_t>() << " negative)";
  return {r.status == Status::pass, os.str()};
}

Outcome criterion8() {
  const Report r = check_shifts();
  std::ostringstream os;
  os << "rank " << r.details["rank"].get<std::size_t>() << ", trace " << r.details["trace"].get<std::string>()
     << ", orthogonal to UPB " << (r.details["orthogonal_to_upb"].get<bool>() ? "yes" : "no") << ", PSD and PPT on 3 cuts "
     << (r.details["psd_and_ppt"].get<bool>() ? "yes" : "no");
  return {r.status == Status::pass, os.str()};
}

Outcome criterion9() {
  const Report a = check_dominance(2, 12, kSeed), b = check_dominance(3, 6, kSeed + 1);
  std::ostringstream os;
  os << a.details["failures"].get<std::size_t>() + b.details["failures"].get<std::size_t>()
     << " violations over 18 multi-term maps (12 at N=2, 6 at N=3)";
  return {a.status == Status::pass && b.status == Status::pass, os.str()};
}

// Best objective over every pair of 2x2 filters with entries in {-1, 0, 1}.
double grid_optimum(const Eigen::MatrixXd& rho) {
  std::vector<Eigen::MatrixXd> grid;
  for (int code = 0; code < 81; ++code) {
    Eigen::MatrixXd m(2, 2);
    for (int k = 0, c = code; k < 4; ++k, c /= 3) m.data()[k] = c % 3 - 1;
    grid.push_back(m);
  }
  double best = 0;
  for (const auto& a : grid)
    for (const auto& b : grid) best = std::max(best, filter_objective(rho, {2, 2}, {a, b}));
  return best;
}

Outcome criterion10() {
  SeesawOptions opts;
  opts.iters = 50;
  opts.restarts = 8;
  opts.seed = kSeed;
  opts.slack = kMonotoneSlack;
  bool ok = true, monotone = true;
  std::ostringstream os;
  for (std::size_t n = 2; n <= 3; ++n) {
    const SeesawResult r = seesaw_estimate(to_eigen(ghz_projector(n)), std::vector<std::size_t>(n, 2), opts);
    ok = ok && r.lower_bound >= 1 - kSeesawOneTol;
    monotone = monotone && r.monotone;
    os << "Phi N=" << n << ": " << r.lower_bound << "; ";
  }
  RMatrix zero(4, 4);
  zero(0, 0) = 1;
  const RMatrix mixed = RMatrix::identity(4) * Rational(1, 4);
  for (const auto& [name, state] : {std::pair{"|00>", zero}, std::pair{"I/4", mixed}}) {
    const Eigen::MatrixXd rho = to_eigen(state);
    const SeesawResult r = seesaw_estimate(rho, {2, 2}, opts);
    const double grid = grid_optimum(rho);
    ok = ok && std::abs(r.lower_bound - 0.5) <= kSeesawHalfTol && std::abs(grid - 0.5) <= kSeesawHalfTol &&
         r.best_objective <= grid + kSeesawHalfTol;
    monotone = monotone && r.monotone;
    os << name << ": " << r.lower_bound << " (grid " << grid << "); ";
  }
  os << "monotone within " << kMonotoneSlack << ": " << (monotone ? "yes" : "no") << "; tolerance " << kSeesawOneTol;
  return {ok && monotone, os.str()};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance gate"};
  std::vector<int> selected;
  app.add_option("--criterion", selected, "Run only these criteria (1-10)")->check(CLI::Range(1, 10));
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::function<Outcome()>> criteria{criterion1, criterion2, criterion3, criterion4, criterion5,
                                                       criterion6, criterion7, criterion8, criterion9, criterion10};
  if (selected.empty())
    for (int k = 1; k <= 10; ++k) selected.push_back(k);

  bool all = true;
  for (int k : selected) {
    Outcome o;
    try {
      o = criteria[static_cast<std::size_t>(k - 1)]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all = all && o.pass;
    std::cout << "criterion " << k << ": " << (o.pass ? "PASS" : "FAIL") << " | " << o.detail << std::endl;
  }
  return all ? 0 : 1;
}
