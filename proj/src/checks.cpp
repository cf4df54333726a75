#include "ghzact/checks.hpp"

#include <set>
#include <sstream>

#include "ghzact/depolarize.hpp"
#include "ghzact/pptgen.hpp"
#include "ghzact/random.hpp"

namespace ghzact {

namespace {

Json labelled(const std::vector<GhzIndex>& labels, const std::vector<Rational>& values) {
  Json out = Json::object();
  for (std::size_t i = 0; i < labels.size(); ++i) out[labels[i].label()] = rational_json(values[i]);
  return out;
}

Json vectors_json(const std::vector<std::vector<Rational>>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(vector_json(v));
  return out;
}

Json coeffs_json(const ThetaCoeffs& c) {
  Json out = Json::object();
  for (std::size_t r = 0; r < c.size(); ++r)
    for (std::size_t s = 0; s < c.size(); ++s)
      if (c.at(r, s) != 0) out[theta_variable(c.labels[r], c.labels[s])] = rational_json(c.at(r, s));
  return out;
}

std::vector<std::size_t> qubit_dims(std::size_t n) { return std::vector<std::size_t>(n, 2); }

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::inconclusive: return "inconclusive";
  }
  return "fail";
}

Json Report::to_json(std::optional<double> runtime_ms) const {
  Json out{{"check", check}, {"params", params}, {"status", to_string(status)}, {"details", details}, {"version", kVersion}};
  if (runtime_ms) out["runtime_ms"] = *runtime_ms;
  return out;
}

std::string Report::to_text() const {
  std::ostringstream os;
  std::string upper = to_string(status);
  for (auto& ch : upper) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  os << "[" << upper << "] " << check;
  for (const auto& [k, v] : params.items()) os << " " << k << "=" << (v.is_string() ? v.get<std::string>() : v.dump());
  os << "\n";
  for (const auto& [k, v] : details.items()) {
    if (v.is_structured()) continue;
    os << "  " << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  }
  return os.str();
}

std::vector<Report> check_depolarization(std::size_t n, std::size_t trials, std::uint64_t seed) {
  const std::size_t d = std::size_t{1} << n;
  std::vector<std::pair<std::string, RMatrix>> states{{"identity", RMatrix::identity(d)}, {"ghz", ghz_projector(n)}};
  for (const auto& name : catalog_names()) {
    if (name == "ghz" || (name == "shifts" && n != 3)) continue;
    states.emplace_back(name, catalog_state(name, n));
  }
  Rng rng(seed);
  for (std::size_t t = 0; t < trials; ++t) states.emplace_back("random-" + std::to_string(t), random_state(d, rng));

  std::vector<Report> out;
  for (const auto& [name, rho] : states) {
    const DepolarizeReport dr = depolarize_report(rho, n);
    Report r;
    r.check = "verify-depolarization";
    r.params = Json{{"n", n}, {"state", name}, {"seed", seed}};
    bool ok = dr.consistent();
    r.details["closed_equals_protocol"] = dr.consistent();
    // Informational: the Pauli steps alone leave real |x⟩⟨x̄| coherences.
    r.details["closed_equals_pauli_steps"] = dr.closed_form_output == dr.pauli_steps_output;
    if (name == "identity" || name == "ghz") {
      const bool fixed = dr.closed_form_output == rho;
      r.details["fixed_point"] = fixed;
      ok = ok && fixed;
    }
    r.details["coefficients"] = labelled(dr.labels, dr.coefficients);
    r.status = status_of(ok);
    out.push_back(std::move(r));
  }
  return out;
}

Report check_ppt(std::size_t n, std::size_t trials, std::uint64_t seed) {
  Rng rng(seed);
  std::size_t disagreements = 0, ppt = 0, subset_checks = 0;
  Json failures = Json::array();
  for (std::size_t t = 0; t < trials; ++t) {
    const ThetaCoeffs c = random_coefficients(n, rng);
    const PptCrosscheck cc = ppt_crosscheck(c);
    subset_checks += cc.subsets.size();
    if (cc.ppt()) ++ppt;
    for (const auto& s : cc.subsets)
      if (s.symbolic_ppt != s.direct_ppt) {
        ++disagreements;
        failures.push_back(Json{{"trial", t}, {"subset", s.subset}, {"coefficients", coeffs_json(c)}});
      }
  }
  Report r;
  r.check = "verify-ppt";
  r.params = Json{{"n", n}, {"trials", trials}, {"seed", seed}};
  r.details = Json{{"subset_checks", subset_checks},
                   {"ppt_matrices", ppt},
                   {"non_ppt_matrices", trials - ppt},
                   {"disagreements", disagreements},
                   {"failures", failures}};
  r.status = status_of(disagreements == 0);
  return r;
}

Report check_jamiolkowski(std::size_t n) {
  const std::size_t d = std::size_t{1} << n;
  const RMatrix theta = jamiolkowski_of([n](const RMatrix& z) { return delta_protocol(z, n); }, d, d);
  const bool ok = theta == theta_matrix(theta_sol(n));
  Report r;
  r.check = "verify-jamiolkowski";
  r.params = Json{{"n", n}};
  r.details = Json{{"equals_theta_sol", ok}, {"coefficients", coeffs_json(coefficients_of(theta, n))}};
  r.status = status_of(ok);
  return r;
}

Report check_lemma1(std::size_t n, const LambdaParam& lambda) {
  const UniquenessReport u = verify_unique_solution(n, lambda);
  const LinearSystem sys = reduced_system(n, lambda);
  Json certs = Json::array();
  for (std::size_t i = 0; i < u.certificates.size(); ++i) {
    Json c{{"target", u.target_labels[i]}, {"found", u.certificates[i].has_value()}};
    if (u.certificates[i]) {
      Json mult = Json::object();
      for (std::size_t k = 0; k < u.certificates[i]->multipliers.size(); ++k)
        if (u.certificates[i]->multipliers[k] != 0)
          mult[sys.tag(k) + (sys.label(k).empty() ? "" : " " + sys.label(k)) + " #" + std::to_string(k)] =
              rational_json(u.certificates[i]->multipliers[k]);
      c["recombines"] = recombines(*u.certificates[i], sys);
      c["slack"] = rational_json(u.certificates[i]->slack);
      c["multipliers"] = mult;
    }
    certs.push_back(c);
  }
  Report r;
  r.check = "verify-lemma1";
  r.params = Json{{"n", n}, {"lambda", to_string(lambda.value())}};
  r.details = Json{{"variables", kReducedNames},
                   {"inequalities", u.inequality_count},
                   {"unique_point", u.enumeration_unique},
                   {"certificates_complete", u.certificates_complete},
                   {"polyhedron", polyhedron_to_json(u.polyhedron)},
                   {"certificates", certs}};
  r.status = status_of(u.pass());
  return r;
}

Report check_cone(std::size_t n) {
  const ConeReport c = half_lambda_cone(n);
  Json decomps = Json::array();
  for (const auto& d : c.ray_decompositions) decomps.push_back(d ? vector_json(*d) : Json(nullptr));
  Json recession = Json::array();
  for (bool b : c.generator_is_recession_direction) recession.push_back(b);
  Report r;
  r.check = "verify-cone";
  r.params = Json{{"n", n}, {"lambda", "1/2"}};
  r.details = Json{{"variables", kReducedNames},
                   {"generator_classes", c.generator_images.size()},
                   {"vertex_count", c.polyhedron.vertices.size()},
                   {"ray_count", c.polyhedron.rays.size()},
                   {"vertex_is_sol", c.vertex_is_sol},
                   {"rays_within_generator_cone", c.rays_within_generator_cone},
                   {"rays_equal_generators", c.rays_equal_generators},
                   {"fixed_output", c.fixed_output},
                   {"matches_two_party_cone", c.matches_two_party_cone ? Json(*c.matches_two_party_cone) : Json(nullptr)},
                   {"generators", vectors_json(c.generator_images)},
                   {"generator_is_recession_direction", recession},
                   {"ray_decompositions", decomps},
                   {"polyhedron", polyhedron_to_json(c.polyhedron)}};
  r.status = status_of(c.pass());
  return r;
}

Report check_lemma2(const SeparableMap& omega, const LambdaParam& lambda) {
  const Lemma2Report l = lemma2_decompose(omega, lambda);
  Json sigma = Json::object();
  for (std::size_t i = 0; i < l.labels.size(); ++i)
    sigma[l.labels[i].label()] = Json{{"trace", rational_json(l.sigma_traces[i])}, {"matrix", matrix_to_json(l.sigma[i])}};
  Report r;
  r.check = "verify-lemma2";
  r.params = Json{{"n", l.n}, {"h_dims", l.h_dims}, {"lambda", to_string(l.lambda)}};
  r.details = Json{{"form_matches", l.form_matches},
                   {"all_sigma_equal", l.all_equal},
                   {"product_form", l.product_form},
                   {"sigma", sigma}};
  r.status = status_of(l.form_matches && l.all_equal && l.product_form);
  return r;
}

Report check_filter_identity(std::size_t n, std::size_t trials, std::size_t z_count, std::uint64_t seed) {
  Rng rng(seed);
  const std::vector<std::size_t> h = qubit_dims(n);
  const std::size_t d = std::size_t{1} << n;
  std::size_t failures = 0;
  std::set<Rational> nus;
  Rational expected;
  for (std::size_t t = 0; t < trials; ++t) {
    const RMatrix rho = random_state(d * d, rng), sigma = random_state(d, rng);
    std::vector<RMatrix> zs;
    for (std::size_t k = 0; k < z_count; ++k) zs.push_back(random_symmetric(d, rng));
    const FilterIdentityReport fr = verify_filter_identity(rho, sigma, zs, h);
    expected = fr.expected_nu;
    if (!fr.pass || *fr.nu != fr.expected_nu) ++failures;
    if (fr.nu) nus.insert(*fr.nu);
  }
  Json nu_list = Json::array();
  for (const auto& q : nus) nu_list.push_back(rational_json(q));
  Report r;
  r.check = "verify-filter-identity";
  r.params = Json{{"n", n}, {"trials", trials}, {"z_per_trial", z_count}, {"seed", seed}};
  r.details = Json{{"failures", failures}, {"expected_nu", rational_json(expected)}, {"observed_nu", nu_list}};
  r.status = status_of(failures == 0);
  return r;
}

Report check_witness_consistency(std::size_t n, std::size_t trials, std::uint64_t seed) {
  Rng rng(seed);
  const std::vector<std::size_t> h = qubit_dims(n);
  const std::size_t d = std::size_t{1} << n;
  const std::vector<Rational> lambdas{Rational(51, 100), Rational(3, 4), Rational(9, 10), Rational(99, 100)};
  std::size_t failures = 0, detections = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    const LambdaParam lambda(lambdas[t % lambdas.size()]);
    const RMatrix rho = random_state(d * d, rng), sigma = random_state(d, rng);
    const Witness w = witness_from_rho(rho, h, lambda);
    const Rational v = w.value(sigma);
    if (v != condition_value(rho, sigma, h, lambda)) ++failures;
    if (v < 0) ++detections;
  }
  Report r;
  r.check = "verify-witness";
  r.params = Json{{"n", n}, {"trials", trials}, {"seed", seed}};
  r.details = Json{{"failures", failures}, {"negative_values", detections}};
  r.status = status_of(failures == 0);
  return r;
}

Report check_shifts() {
  const RMatrix s = shifts_state();
  bool orthogonal = true;
  for (const auto& v : shifts_upb_vectors())
    if (!(s * RMatrix::column(v)).is_zero()) orthogonal = false;
  Json bip = Json::array();
  bool ppt = psd_check(s).is_psd();
  for (std::size_t p = 0; p < 3; ++p) {
    const bool ok = psd_check(partial_transpose(s, SubsystemShape::qubits(3), {p})).is_psd();
    bip.push_back(Json{{"transposed_party", p}, {"psd", ok}});
    ppt = ppt && ok;
  }
  const std::size_t rank = s.rank();
  Report r;
  r.check = "verify-shifts";
  r.params = Json::object();
  r.details = Json{{"rank", rank},
                   {"trace", rational_json(s.trace())},
                   {"orthogonal_to_upb", orthogonal},
                   {"psd_and_ppt", ppt},
                   {"bipartitions", bip}};
  r.status = status_of(rank == 4 && s.trace() == 1 && orthogonal && ppt);
  return r;
}

Report check_dominance(std::size_t n, std::size_t trials, std::uint64_t seed) {
  Rng rng(seed);
  const std::size_t d = std::size_t{1} << n;
  std::size_t failures = 0, done = 0, skipped = 0;
  Json cases = Json::array();
  while (done < trials) {
    const SeparableMap omega = random_separable_map(qubit_dims(n), qubit_dims(n), 2 + done % 3, rng);
    const RMatrix rho = random_state(d, rng);
    if (apply_map(omega, rho).trace() == 0) {
      ++skipped;
      continue;
    }
    const DominanceReport dr = single_kraus_dominance_check(rho, omega);
    if (!dr.holds) ++failures;
    cases.push_back(Json{{"terms", omega.terms().size()},
                         {"mixture", rational_json(dr.mixture_fidelity)},
                         {"best_single", rational_json(dr.best_single)}});
    ++done;
  }
  Report r;
  r.check = "verify-dominance";
  r.params = Json{{"n", n}, {"trials", trials}, {"seed", seed}};
  r.details = Json{{"failures", failures}, {"skipped_zero_weight", skipped}, {"cases", cases}};
  r.status = status_of(failures == 0);
  return r;
}

Report witness_report(const RMatrix& rho_hk, const RMatrix& sigma, const std::vector<std::size_t>& h_dims,
                      const LambdaParam& lambda) {
  const Witness w = witness_from_rho(rho_hk, h_dims, lambda);
  const Rational v = w.value(sigma), c = condition_value(rho_hk, sigma, h_dims, lambda);
  Report r;
  r.check = "witness";
  r.params = Json{{"lambda", to_string(lambda.value())}, {"h_dims", h_dims}};
  r.details = Json{{"value", rational_json(v)},
                   {"condition", rational_json(c)},
                   {"consistent", v == c},
                   {"detects", v < 0},
                   {"e_lower_bound", rational_json(w.e_bound)},
                   {"premise", w.valid() ? "unrefuted" : "violated"},
                   {"witness", matrix_to_json(w.matrix)}};
  if (v != c)
    r.status = Status::fail;
  else
    r.status = w.valid() ? Status::pass : Status::inconclusive;
  return r;
}

Report activation_search_report(const RMatrix& sigma, const std::vector<std::size_t>& h_dims, const LambdaParam& lambda,
                                std::size_t trials, std::uint64_t seed) {
  const ActivationSearch s = search_activation(sigma, h_dims, lambda, trials, seed);
  Report r;
  r.check = "witness";
  r.params = Json{{"lambda", to_string(lambda.value())}, {"h_dims", h_dims}, {"search_trials", trials}, {"seed", seed}};
  r.details = Json{{"mode", "search"}, {"guaranteed", false}, {"found", s.found}};
  if (s.best) {
    r.details["best_trial"] = s.best->trial;
    r.details["condition"] = rational_json(s.best->condition);
    r.details["filtered_fidelity"] = rational_json(s.best->filtered_fidelity);
    r.details["rho"] = matrix_to_json(s.best->rho);
  }
  // Not finding a candidate says nothing about σ.
  r.status = s.found ? Status::pass : Status::inconclusive;
  return r;
}

Report fidelity_report(const RMatrix& state, const SeparableMap& filter) {
  Report r;
  r.check = "fidelity";
  r.params = Json{{"terms", filter.terms().size()}, {"input_dims", filter.input_dims()}};
  const FilterResult fr = fidelity_after_map(state, filter);
  bool ok = fr.fidelity >= 0 && fr.fidelity <= 1;
  r.details = Json{{"fidelity", rational_json(fr.fidelity)},
                   {"success_weight", rational_json(fr.success_weight)},
                   {"label", "lower bound on E"}};
  if (filter.terms().size() > 1) {
    const DominanceReport dr = single_kraus_dominance_check(state, filter);
    Json terms = Json::array();
    for (const auto& f : dr.term_fidelities) terms.push_back(f ? rational_json(*f) : Json(nullptr));
    r.details["best_single_term"] = rational_json(dr.best_single);
    r.details["dominance_holds"] = dr.holds;
    r.details["term_fidelities"] = terms;
    ok = ok && dr.holds;
  }
  r.status = status_of(ok);
  return r;
}

Report seesaw_report(const RMatrix& state, const std::vector<std::size_t>& dims, const SeesawOptions& opts) {
  const SeesawResult s = seesaw_estimate(to_eigen(state), dims, opts);
  Json runs = Json::array();
  for (const auto& run : s.runs)
    runs.push_back(Json{{"seed", run.seed}, {"best", run.best}, {"monotone", run.monotone}, {"sweeps", run.history.size() - 1}});
  Report r;
  r.check = "seesaw";
  r.params = Json{{"dims", dims}, {"iters", opts.iters}, {"restarts", opts.restarts}, {"seed", opts.seed}};
  r.details = Json{{"float", true},
                   {"label", "lower bound on E"},
                   {"lower_bound", s.lower_bound},
                   {"best_objective", s.best_objective},
                   {"monotone", s.monotone},
                   {"runs", runs}};
  r.status = status_of(s.monotone);
  return r;
}

Report enumerate_report(const LinearSystem& system) {
  const Polyhedron p = enumerate_polyhedron(system);
  Report r;
  r.check = "enumerate";
  r.params = Json{{"variables", system.dimension()}, {"inequalities", system.size()}};
  r.details = Json{{"variables", system.variables()},
                   {"empty", p.empty()},
                   {"vertex_count", p.vertices.size()},
                   {"ray_count", p.rays.size()},
                   {"lineality_dim", p.lineality.size()},
                   {"polyhedron", polyhedron_to_json(p)}};
  r.status = Status::pass;
  return r;
}

Report catalog_report(std::size_t n) {
  Json states = Json::array();
  for (const auto& name : catalog_names()) {
    const std::size_t parties = name == "shifts" ? 3 : n;
    const RMatrix s = catalog_state(name, parties);
    states.push_back(Json{{"name", name}, {"n", parties}, {"trace", rational_json(s.trace())}, {"rank", s.rank()}});
  }
  Report r;
  r.check = "catalog";
  r.params = Json{{"n", n}};
  r.details = Json{{"states", states}};
  r.status = Status::pass;
  return r;
}

}  // namespace ghzact
