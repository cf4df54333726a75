#include "ghzact/lemmas.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "ghzact/depolarize.hpp"
#include "ghzact/pptgen.hpp"

namespace ghzact {

namespace {

using Terms = std::vector<std::pair<std::string, Rational>>;

enum Slot { kPP, kPM, kMP, kMM, kP2, kM2, k2P, k2M, k22, k24 };

std::string name(Slot s) { return kReducedNames[s]; }

// Reduced slot of the full variable Θ_{rc}.
Slot slot_of(const GhzIndex& r, const GhzIndex& c) {
  using K = GhzIndex::Kind;
  if (!r.is_even() && !c.is_even()) {
    if (r.kind == K::plus) return c.kind == K::plus ? kPP : kPM;
    return c.kind == K::plus ? kMP : kMM;
  }
  if (!r.is_even()) return r.kind == K::plus ? kP2 : kM2;
  if (!c.is_even()) return c.kind == K::plus ? k2P : k2M;
  return r.x == c.x ? k22 : k24;
}

void check_parties(std::size_t n) {
  if (n < 2) throw std::invalid_argument("party count must be at least 2");
}

void add_pin(LinearSystem& sys, std::size_t n) {
  if (n == 2) sys.add({{name(k24), Rational(1)}}, 0, "pin", "T(2,4)<=0 (no second even string)");
}

Rational mean(const std::vector<Rational>& v) {
  if (v.empty()) return 0;
  Rational s = std::accumulate(v.begin(), v.end(), Rational(0));
  return s / static_cast<long>(v.size());
}

}  // namespace

LambdaParam::LambdaParam(Rational value) : value_(std::move(value)) {
  if (value_ < Rational(1, 2) || value_ >= 1)
    throw std::invalid_argument("lambda must lie in [1/2, 1), got " + to_string(value_));
}

Rational g_coefficient(std::size_t n) {
  check_parties(n);
  return Rational(static_cast<long>(even_count(n)));
}

ReducedTheta ReducedTheta::from_point(std::span<const Rational> point) {
  if (point.size() != 10) throw std::invalid_argument("reduced point needs exactly 10 coordinates");
  ReducedTheta t;
  std::copy(point.begin(), point.end(), t.values.begin());
  return t;
}

ReducedTheta reduced_theta_sol() {
  ReducedTheta t;
  t.values[kPP] = 1;
  t.values[kMM] = 1;
  t.values[k22] = 2;
  return t;
}

LinearSystem lemma1_full_system(std::size_t n, const LambdaParam& lambda) {
  check_parties(n);
  const Rational& l = lambda.value();
  LinearSystem sys = ppt_system(n);
  const auto labels = ghz_indices(n);
  const auto P = GhzIndex::plus(), M = GhzIndex::minus();

  auto row = [&](const GhzIndex& r) {
    Terms t;
    for (const auto& c : labels) t.emplace_back(theta_variable(r, c), l);
    t.emplace_back(theta_variable(r, P), Rational(-1));
    return t;
  };
  sys.add(row(P), 1 - l, "ku1", "ku1");
  sys.add(row(M), -l, "ku2", "ku2");
  for (const auto& x : labels)
    if (x.is_even()) sys.add(row(x), -2 * l, "ku3", "ku3[x=" + x.label() + "]");
  return sys;
}

ThetaCoeffs group_average(const ThetaCoeffs& coeffs) {
  const std::size_t k = coeffs.size();
  std::vector<Rational> by_slot[10];
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c) by_slot[slot_of(coeffs.labels[r], coeffs.labels[c])].push_back(coeffs.at(r, c));
  // Θ_{±x} is averaged per ± row, Θ_{x±} per ± column.
  ThetaCoeffs out(coeffs.n);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c) {
      const Slot s = slot_of(coeffs.labels[r], coeffs.labels[c]);
      out.at(r, c) = s <= kMM ? coeffs.at(r, c) : mean(by_slot[s]);
    }
  return out;
}

ThetaCoeffs group_average_bruteforce(const ThetaCoeffs& coeffs) {
  const std::size_t k = coeffs.size();
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  ThetaCoeffs out(coeffs.n);
  long count = 0;
  do {
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c) out.at(r, c) += coeffs.at(perm[r], perm[c]);
    ++count;
  } while (std::next_permutation(perm.begin() + 2, perm.end()));
  for (auto& v : out.values) v /= count;
  return out;
}

bool is_invariant(const ThetaCoeffs& coeffs) { return group_average(coeffs) == coeffs; }

ReducedTheta reduce(const ThetaCoeffs& coeffs) {
  const auto P = GhzIndex::plus(), M = GhzIndex::minus(), X = GhzIndex::even(2);
  ReducedTheta t;
  t.values[kPP] = coeffs.at(P, P);
  t.values[kPM] = coeffs.at(P, M);
  t.values[kMP] = coeffs.at(M, P);
  t.values[kMM] = coeffs.at(M, M);
  t.values[kP2] = coeffs.at(P, X);
  t.values[kM2] = coeffs.at(M, X);
  t.values[k2P] = coeffs.at(X, P);
  t.values[k2M] = coeffs.at(X, M);
  t.values[k22] = coeffs.at(X, X);
  t.values[k24] = coeffs.n >= 3 ? coeffs.at(X, GhzIndex::even(4)) : Rational(0);
  return t;
}

ThetaCoeffs embed(const ReducedTheta& reduced, std::size_t n) {
  check_parties(n);
  ThetaCoeffs out(n);
  for (std::size_t r = 0; r < out.size(); ++r)
    for (std::size_t c = 0; c < out.size(); ++c) out.at(r, c) = reduced.values[slot_of(out.labels[r], out.labels[c])];
  return out;
}

LinearSystem reduced_system(std::size_t n, const LambdaParam& lambda) {
  check_parties(n);
  const Rational& l = lambda.value();
  const Rational g = g_coefficient(n);
  const Rational one = 1, neg = -1;
  LinearSystem sys(std::vector<std::string>(kReducedNames.begin(), kReducedNames.end()));
  for (int s = 0; s < 10; ++s) sys.add({{name(Slot(s)), neg}}, 0, "positivity", name(Slot(s)) + ">=0");

  sys.add_absolute({{name(kPP), one}, {name(kPM), neg}, {name(kMP), one}, {name(kMM), neg}},
                   {{name(kP2), neg}, {name(kM2), neg}}, 0, "ppt-A", "ppt-A");
  sys.add_absolute({{name(kPP), one}, {name(kPM), one}, {name(kMP), neg}, {name(kMM), neg}},
                   {{name(k2P), neg}, {name(k2M), neg}}, 0, "ppt-B", "ppt-B");
  if (n >= 3) {
    sys.add_absolute({{name(kP2), one}, {name(kM2), neg}}, {{name(k24), neg}}, 0, "ppt-C", "ppt-C");
    sys.add_absolute({{name(k2P), one}, {name(k2M), neg}}, {{name(k24), neg}}, 0, "ppt-D", "ppt-D");
  }
  sys.add_absolute({{name(kP2), one}, {name(kM2), neg}, {name(k2P), one}, {name(k2M), neg}},
                   {{name(kPP), neg}, {name(kPM), one}, {name(kMP), one}, {name(kMM), neg}, {name(k22), neg}}, 0,
                   "ppt-E", "ppt-E");
  sys.add_absolute({{name(kP2), one}, {name(kM2), neg}, {name(k2P), neg}, {name(k2M), one}},
                   {{name(kPP), one}, {name(kPM), neg}, {name(kMP), neg}, {name(kMM), one}, {name(k22), neg}}, 0,
                   "ppt-F", "ppt-F");

  sys.add({{name(kPP), l - 1}, {name(kPM), l}, {name(kP2), l * g}}, 1 - l, "b1", "b1");
  sys.add({{name(kMP), l - 1}, {name(kMM), l}, {name(kM2), l * g}}, -l, "b2", "b2");
  sys.add({{name(k2P), l - 1}, {name(k2M), l}, {name(k24), l * (g - 1)}, {name(k22), l}}, -2 * l, "b3", "b3");
  add_pin(sys, n);
  return sys;
}

LinearSystem reduced_system_by_substitution(std::size_t n, const LambdaParam& lambda) {
  const LinearSystem full = lemma1_full_system(n, lambda);
  const auto labels = ghz_indices(n);
  LinearSystem sys(std::vector<std::string>(kReducedNames.begin(), kReducedNames.end()));
  for (std::size_t i = 0; i < full.size(); ++i) {
    LinearInequality red;
    red.coefficients.assign(10, Rational(0));
    red.constant = full.row(i).constant;
    for (std::size_t r = 0; r < labels.size(); ++r)
      for (std::size_t c = 0; c < labels.size(); ++c)
        red.coefficients[slot_of(labels[r], labels[c])] += full.row(i).coefficients[r * labels.size() + c];
    if (!red.is_trivial()) sys.add(red, full.tag(i), full.label(i));
  }
  // N = 2: Θ_24 has no preimage, so the embedding fixes it to 0 from both sides.
  if (n == 2) sys.add({{name(k24), Rational(-1)}}, 0, "positivity", name(k24) + ">=0");
  add_pin(sys, n);
  return sys;
}

std::vector<std::pair<std::string, LinearInequality>> bounding_inequalities() {
  std::vector<std::pair<std::string, LinearInequality>> out;
  const auto sol = reduced_theta_sol();
  for (int s = 0; s < 10; ++s) {
    const Rational& v = sol.values[s];
    LinearInequality lower, upper;
    lower.coefficients.assign(10, Rational(0));
    upper.coefficients.assign(10, Rational(0));
    lower.coefficients[s] = -1;
    lower.constant = v;
    upper.coefficients[s] = 1;
    upper.constant = -v;
    out.emplace_back(to_string(v) + "<=" + name(Slot(s)), lower);
    out.emplace_back(name(Slot(s)) + "<=" + to_string(v), upper);
  }
  return out;
}

UniquenessReport verify_unique_solution(std::size_t n, const LambdaParam& lambda) {
  if (lambda.value() == Rational(1, 2))
    throw std::invalid_argument("lambda = 1/2 has a cone of solutions; use the cone check");
  UniquenessReport rep;
  rep.n = n;
  rep.lambda = lambda.value();
  const LinearSystem sys = reduced_system(n, lambda);
  rep.inequality_count = sys.size();
  rep.polyhedron = enumerate_polyhedron(sys);
  rep.enumeration_unique =
      rep.polyhedron.is_single_point() && rep.polyhedron.vertices.front() == reduced_theta_sol().point();
  rep.certificates_complete = true;
  for (const auto& [label, target] : bounding_inequalities()) {
    rep.target_labels.push_back(label);
    rep.certificates.push_back(farkas_combination(target, sys));
    if (!rep.certificates.back()) rep.certificates_complete = false;
  }
  return rep;
}

RMatrix apply_coefficients(const ThetaCoeffs& coeffs, const RMatrix& z) {
  const auto& fam = cached_family(coeffs.n);
  std::vector<Rational> overlaps(fam.size());
  for (std::size_t c = 0; c < fam.size(); ++c) overlaps[c] = trace_of_product(fam.projectors[c], z);
  const std::size_t d = std::size_t{1} << coeffs.n;
  RMatrix out(d, d);
  for (std::size_t r = 0; r < fam.size(); ++r) {
    Rational w = 0;
    for (std::size_t c = 0; c < fam.size(); ++c) w += coeffs.at(r, c) * overlaps[c];
    if (w != 0) out += fam.projectors[r] * w;
  }
  return out;
}

bool ConeReport::pass() const {
  return vertex_is_sol && rays_equal_generators && fixed_output && matches_two_party_cone.value_or(true);
}

ConeReport half_lambda_cone(std::size_t n) {
  check_parties(n);
  const LambdaParam half(Rational(1, 2));
  ConeReport rep;
  rep.n = n;
  rep.polyhedron = enumerate_polyhedron(reduced_system(n, half));
  const auto& poly = rep.polyhedron;
  rep.vertex_is_sol =
      poly.vertices.size() == 1 && poly.lineality.empty() && poly.vertices.front() == reduced_theta_sol().point();

  // Θ^[r] = P_r ⊗ (P_+ + P_-), read back through the coefficient extraction
  // and symmetrized over the even labels.
  const auto& fam = cached_family(n);
  const RMatrix pm = fam.at(GhzIndex::plus()) + fam.at(GhzIndex::minus());
  std::vector<std::vector<Rational>> images;
  for (const auto& r : {GhzIndex::plus(), GhzIndex::minus(), GhzIndex::even(2)}) {
    const ThetaCoeffs c = group_average(coefficients_of(tensor(fam.at(r), pm), n));
    images.push_back(primitive_direction(reduce(c).point()));
  }
  rep.generator_images = images;

  RMatrix gen(10, images.size());
  for (std::size_t j = 0; j < images.size(); ++j)
    for (std::size_t i = 0; i < 10; ++i) gen(i, j) = images[j][i];
  rep.rays_within_generator_cone = true;
  for (const auto& ray : poly.rays) {
    rep.ray_decompositions.push_back(solve_nonnegative(gen, ray));
    if (!rep.ray_decompositions.back()) rep.rays_within_generator_cone = false;
  }
  auto sorted_images = images;
  std::sort(sorted_images.begin(), sorted_images.end());
  rep.rays_equal_generators = poly.lineality.empty() && poly.rays == sorted_images;

  RMatrix ray_cols(10, poly.rays.size());
  for (std::size_t j = 0; j < poly.rays.size(); ++j)
    for (std::size_t i = 0; i < 10; ++i) ray_cols(i, j) = poly.rays[j][i];
  for (const auto& img : images)
    rep.generator_is_recession_direction.push_back(poly.lineality.empty() && solve_nonnegative(ray_cols, img));

  // The vertex must reproduce Z = ½𝕀 − P_+ and every ray must annihilate it.
  const std::size_t d = std::size_t{1} << n;
  const RMatrix z = RMatrix::identity(d) * Rational(1, 2) - fam.at(GhzIndex::plus());
  rep.fixed_output = !poly.vertices.empty();
  for (const auto& v : poly.vertices)
    if (apply_coefficients(embed(ReducedTheta::from_point(v), n), z) != z) rep.fixed_output = false;
  for (const auto& r : poly.rays)
    if (!apply_coefficients(embed(ReducedTheta::from_point(r), n), z).is_zero()) rep.fixed_output = false;

  if (n > 2) {
    const Polyhedron two = enumerate_polyhedron(reduced_system(2, half));
    rep.matches_two_party_cone =
        two.vertices == poly.vertices && two.rays == poly.rays && two.lineality == poly.lineality;
  }
  return rep;
}

Lemma2Report lemma2_decompose(const SeparableMap& omega, const LambdaParam& lambda) {
  const std::size_t n = omega.parties();
  check_parties(n);
  for (auto d : omega.input_dims())
    if (d != 2) throw std::invalid_argument("lemma2: the input parties must be qubits");
  Lemma2Report rep;
  rep.n = n;
  rep.lambda = lambda.value();
  for (auto d : omega.output_dims()) {
    if (d % 2 != 0) throw std::invalid_argument("lemma2: every output party must be H_n ⊗ qubit (even dimension)");
    rep.h_dims.push_back(d / 2);
  }
  const std::vector<std::size_t> qubit_dims(n, 2);
  const std::size_t dk = std::size_t{1} << n;
  const std::size_t dh = std::accumulate(rep.h_dims.begin(), rep.h_dims.end(), std::size_t{1}, std::multiplies<>());

  const auto& fam = cached_family(n);
  const RMatrix& phi = fam.at(GhzIndex::plus());
  const RMatrix target = RMatrix::identity(dk) * lambda.value() - phi;

  const RMatrix mapped = apply_map(omega, delta_closed(target, n));
  const RMatrix grouped = party_major_to_grouped(mapped, rep.h_dims, qubit_dims);
  std::vector<std::size_t> dims = rep.h_dims;
  dims.insert(dims.end(), qubit_dims.begin(), qubit_dims.end());
  const SubsystemShape shape(dims);
  std::vector<std::size_t> k_parties(n), h_parties(n);
  std::iota(h_parties.begin(), h_parties.end(), std::size_t{0});
  std::iota(k_parties.begin(), k_parties.end(), n);
  rep.output = delta_subset(grouped, shape, {k_parties});

  // Block A_r of output = Σ_r A_r ⊗ P_r is c_r tr_K[(𝕀 ⊗ P_r) output].
  rep.labels = fam.labels;
  const RMatrix id_h = RMatrix::identity(dh);
  RMatrix rebuilt(dh * dk, dh * dk);
  for (std::size_t r = 0; r < fam.size(); ++r) {
    const GhzIndex& label = fam.labels[r];
    const Rational c = label.depolarization_weight();
    RMatrix block = partial_trace(tensor(id_h, fam.projectors[r]) * rep.output, shape, h_parties) * c;
    const Rational scale = label.kind == GhzIndex::Kind::plus ? Rational(lambda.value() - 1) : Rational(c * lambda.value());
    RMatrix sigma = block * (1 / scale);
    rebuilt += tensor(sigma * scale, fam.projectors[r]);
    rep.sigma_traces.push_back(sigma.trace());
    rep.sigma.push_back(std::move(sigma));
  }
  rep.form_matches = rebuilt == rep.output;
  rep.all_equal = std::all_of(rep.sigma.begin(), rep.sigma.end(), [&](const RMatrix& s) { return s == rep.sigma[0]; });
  rep.product_form = tensor(rep.sigma[0], target) == rep.output;
  return rep;
}

}  // namespace ghzact
