#include "ghzact/activation.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace ghzact {

namespace {

std::size_t product(const std::vector<std::size_t>& dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

std::size_t qubit_count(std::size_t dim) {
  std::size_t n = 0;
  while ((std::size_t{1} << n) < dim) ++n;
  if ((std::size_t{1} << n) != dim || n < 2) throw std::invalid_argument("output must be an N-qubit operator, N >= 2");
  return n;
}

FilterResult finish(RMatrix out) {
  const std::size_t n = qubit_count(out.rows());
  FilterResult r;
  r.success_weight = out.trace();
  if (r.success_weight == 0) throw std::invalid_argument("filter has zero success weight on this state");
  r.fidelity = trace_of_product(out, ghz_projector(n)) / r.success_weight;
  r.filtered_state = std::move(out);
  return r;
}

SubsystemShape grouped_shape(const std::vector<std::size_t>& h_dims) {
  std::vector<std::size_t> dims = h_dims;
  dims.insert(dims.end(), h_dims.size(), 2);
  return SubsystemShape(dims);
}

void check_hk(const RMatrix& rho, const std::vector<std::size_t>& h_dims) {
  if (h_dims.size() < 2) throw std::invalid_argument("need at least two parties");
  grouped_shape(h_dims).check(rho);
}

RMatrix ghz_deficit(std::size_t n, const Rational& lambda) {
  return RMatrix::identity(std::size_t{1} << n) * lambda - ghz_projector(n);
}

}  // namespace

void PartitionSpec::validate() const {
  if (subsets.empty()) throw std::invalid_argument("partition needs at least one subset");
  std::vector<bool> used(n, false);
  for (const auto& s : subsets) {
    if (s.size() < 2) throw std::invalid_argument("every distilling subset needs at least two parties");
    for (auto p : s) {
      if (p >= n) throw std::invalid_argument("party index out of range");
      if (used[p]) throw std::invalid_argument("partition subsets overlap");
      used[p] = true;
    }
  }
}

std::vector<std::size_t> PartitionSpec::rest() const {
  std::vector<bool> used(n, false);
  for (const auto& s : subsets)
    for (auto p : s) used[p] = true;
  std::vector<std::size_t> r;
  for (std::size_t p = 0; p < n; ++p)
    if (!used[p]) r.push_back(p);
  return r;
}

FilterResult fidelity_after_filter(const RMatrix& rho, const KrausTerm& filter) {
  const RMatrix m = tensor(std::span(filter.factors));
  if (m.cols() != rho.rows()) throw std::invalid_argument("filter input dimension does not match the state");
  return finish(m * rho * m.transpose() * filter.weight);
}

FilterResult fidelity_after_map(const RMatrix& rho, const SeparableMap& omega) { return finish(apply_map(omega, rho)); }

DominanceReport single_kraus_dominance_check(const RMatrix& rho, const SeparableMap& omega) {
  DominanceReport rep;
  rep.mixture_fidelity = fidelity_after_map(rho, omega).fidelity;
  bool any = false;
  for (const auto& term : omega.terms()) {
    std::optional<Rational> f;
    if (term.weight != 0) {
      const RMatrix m = omega.kraus_operator(static_cast<std::size_t>(&term - omega.terms().data()));
      RMatrix out = m * rho * m.transpose() * term.weight;
      if (out.trace() != 0) f = finish(std::move(out)).fidelity;
    }
    if (f && (!any || *f > rep.best_single)) {
      rep.best_single = *f;
      any = true;
    }
    rep.term_fidelities.push_back(f);
  }
  rep.holds = any && rep.mixture_fidelity <= rep.best_single;
  return rep;
}

Rational deterministic_upgrade(const Rational& fidelity, const Rational& success_probability) {
  if (success_probability <= 0 || success_probability > 1)
    throw std::invalid_argument("success probability must lie in (0, 1]");
  return success_probability * fidelity + (1 - success_probability) / 2;
}

KrausTerm tilde_filter(const std::vector<std::size_t>& h_dims) {
  KrausTerm t;
  for (auto h : h_dims) {
    if (h < 1) throw std::invalid_argument("local dimension must be positive");
    RMatrix f(2, h * h * 2);
    for (std::size_t a = 0; a < h; ++a)
      for (std::size_t k = 0; k < 2; ++k) f(k, (a * h + a) * 2 + k) = 1;
    t.factors.push_back(std::move(f));
    t.weight /= static_cast<long>(h);
  }
  return t;
}

RMatrix filter_input_state(const RMatrix& rho_jk, const RMatrix& sigma_h, const std::vector<std::size_t>& h_dims) {
  const std::size_t n = h_dims.size();
  check_hk(rho_jk, h_dims);
  SubsystemShape(h_dims).check(sigma_h);
  std::vector<std::size_t> dims = h_dims;
  dims.insert(dims.end(), h_dims.begin(), h_dims.end());
  dims.insert(dims.end(), n, 2);
  std::vector<std::size_t> order;
  for (std::size_t p = 0; p < n; ++p) {
    order.push_back(p);
    order.push_back(n + p);
    order.push_back(2 * n + p);
  }
  return permute_subsystems(tensor(sigma_h, rho_jk), SubsystemShape(dims), order);
}

Rational contracted_overlap(const RMatrix& rho_jk, const RMatrix& sigma, const RMatrix& z) {
  return trace_of_product(rho_jk, tensor(sigma.transpose(), z));
}

FilterIdentityReport verify_filter_identity(const RMatrix& rho_jk, const RMatrix& sigma_h, const std::vector<RMatrix>& zs,
                                            const std::vector<std::size_t>& h_dims) {
  FilterIdentityReport rep;
  rep.expected_nu = 1;
  for (auto h : h_dims) rep.expected_nu /= static_cast<long>(h);
  const KrausTerm filter = tilde_filter(h_dims);
  const RMatrix m = tensor(std::span(filter.factors));
  const RMatrix out = m * filter_input_state(rho_jk, sigma_h, h_dims) * m.transpose() * filter.weight;
  for (const auto& z : zs) {
    rep.lhs.push_back(trace_of_product(out, z));
    rep.rhs.push_back(contracted_overlap(rho_jk, sigma_h, z));
    if (!rep.nu && rep.rhs.back() != 0) rep.nu = rep.lhs.back() / rep.rhs.back();
  }
  rep.pass = rep.nu && *rep.nu > 0;
  for (std::size_t i = 0; i < zs.size() && rep.pass; ++i)
    if (rep.lhs[i] != *rep.nu * rep.rhs[i]) rep.pass = false;
  return rep;
}

Rational e_lower_bound(const RMatrix& rho_hk, const std::vector<std::size_t>& h_dims) {
  check_hk(rho_hk, h_dims);
  const std::size_t n = h_dims.size(), dh = product(h_dims), dk = std::size_t{1} << n;
  const RMatrix phi = ghz_projector(n);
  Rational best(1, 2);
  auto consider = [&](const RMatrix& block) {
    const Rational t = block.trace();
    if (t == 0) return;
    const Rational f = trace_of_product(block, phi) / t;
    if (f > best) best = f;
  };
  RMatrix reduced(dk, dk);
  for (std::size_t a = 0; a < dh; ++a) {
    RMatrix block(dk, dk);
    for (std::size_t i = 0; i < dk; ++i)
      for (std::size_t j = 0; j < dk; ++j) block(i, j) = rho_hk(a * dk + i, a * dk + j);
    reduced += block;
    consider(block);
  }
  consider(reduced);
  return best;
}

Rational Witness::value(const RMatrix& sigma) const {
  if (sigma.rows() != matrix.rows() || sigma.cols() != matrix.cols())
    throw std::invalid_argument("sigma does not act on the witness space");
  return hs_inner(sigma, matrix);
}

Witness witness_from_rho(const RMatrix& rho_hk, const std::vector<std::size_t>& h_dims, const LambdaParam& lambda) {
  check_hk(rho_hk, h_dims);
  const std::size_t n = h_dims.size();
  std::vector<std::size_t> keep(n);
  std::iota(keep.begin(), keep.end(), std::size_t{0});
  Witness w;
  w.lambda = lambda.value();
  w.h_dims = h_dims;
  const RMatrix op = tensor(RMatrix::identity(product(h_dims)), ghz_deficit(n, lambda.value()));
  w.matrix = partial_trace(rho_hk * op, grouped_shape(h_dims), keep);
  w.e_bound = e_lower_bound(rho_hk, h_dims);
  w.premise = w.e_bound > lambda.value() ? PremiseStatus::violated : PremiseStatus::unrefuted;
  return w;
}

Rational condition_value(const RMatrix& rho_hk, const RMatrix& sigma, const std::vector<std::size_t>& h_dims,
                         const LambdaParam& lambda) {
  check_hk(rho_hk, h_dims);
  SubsystemShape(h_dims).check(sigma);
  return trace_of_product(rho_hk, tensor(sigma.transpose(), ghz_deficit(h_dims.size(), lambda.value())));
}

Rational teleport_fidelity(const Rational& e) {
  if (e < Rational(1, 2) || e > 1) throw std::invalid_argument("E must lie in [1/2, 1], got " + to_string(e));
  return (2 * e + 1) / 3;
}

RMatrix q_target_operator(const PartitionSpec& partition) {
  partition.validate();
  std::vector<RMatrix> factors;
  std::vector<std::size_t> listed;
  for (const auto& s : partition.subsets) {
    factors.push_back(ghz_projector(s.size()));
    listed.insert(listed.end(), s.begin(), s.end());
  }
  const auto r = partition.rest();
  factors.push_back(RMatrix::identity(std::size_t{1} << r.size()));
  listed.insert(listed.end(), r.begin(), r.end());
  std::vector<std::size_t> inverse(partition.n);
  for (std::size_t k = 0; k < listed.size(); ++k) inverse[listed[k]] = k;
  return permute_subsystems(tensor(std::span(factors)), SubsystemShape::qubits(partition.n), inverse);
}

Rational q_fidelity(const RMatrix& state, const PartitionSpec& partition) {
  const Rational t = state.trace();
  if (t == 0) throw std::invalid_argument("state has zero trace");
  return trace_of_product(state, q_target_operator(partition)) / t;
}

QTrivialBound q_trivial_bound(const PartitionSpec& partition) {
  partition.validate();
  QTrivialBound b;
  b.bound = Rational(1, 1);
  for (std::size_t m = 0; m < partition.subsets.size(); ++m) b.bound /= 2;
  b.achieved = q_fidelity(all_zero_state(partition.n), partition);
  b.strategy = "every party prepares |0>";
  return b;
}

ActivationSearch search_activation(const RMatrix& sigma, const std::vector<std::size_t>& h_dims,
                                   const LambdaParam& lambda, std::size_t trials, std::uint64_t seed) {
  const std::size_t n = h_dims.size();
  SubsystemShape(h_dims).check(sigma);
  const std::vector<std::size_t> qubits(n, 2);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-2, 2), terms(1, 3);

  auto product_projector = [&](const std::vector<std::vector<Rational>>& vs) {
    std::vector<RMatrix> f;
    for (const auto& v : vs) f.push_back(RMatrix::outer(v, v));
    return party_major_to_grouped(tensor(std::span(f)), h_dims, qubits);
  };

  ActivationSearch out;
  for (std::size_t trial = 0; trial < std::max<std::size_t>(trials, 1); ++trial) {
    const std::size_t count = trial == 0 ? 1 : static_cast<std::size_t>(terms(rng));
    RMatrix rho;
    for (std::size_t t = 0; t < count; ++t) {
      std::vector<std::vector<Rational>> vs;
      for (auto h : h_dims) {
        std::vector<Rational> v(2 * h, Rational(0));
        if (trial == 0) {
          for (std::size_t i = 0; i < std::min<std::size_t>(h, 2); ++i) v[i * 2 + i] = 1;
        } else {
          do
            for (auto& c : v) c = entry(rng);
          while (std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; }));
        }
        vs.push_back(std::move(v));
      }
      RMatrix p = product_projector(vs);
      rho = t == 0 ? std::move(p) : rho + p;
    }
    ++out.trials;
    const Rational c = condition_value(rho, sigma, h_dims, lambda);
    if (!out.best || c < out.best->condition) out.best = ActivationCandidate{trial, std::move(rho), c, Rational(0)};
  }
  out.found = out.best->condition < 0;
  try {
    out.best->filtered_fidelity =
        fidelity_after_filter(filter_input_state(out.best->rho, sigma, h_dims), tilde_filter(h_dims)).fidelity;
  } catch (const std::invalid_argument&) {
    out.best->filtered_fidelity = 0;
  }
  return out;
}

}  // namespace ghzact
