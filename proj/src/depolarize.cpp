#include "ghzact/depolarize.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace ghzact {

SignedPermutation SignedPermutation::identity(std::size_t dim) {
  SignedPermutation u;
  u.perm.resize(dim);
  std::iota(u.perm.begin(), u.perm.end(), std::size_t{0});
  u.sign.assign(dim, 1);
  return u;
}

SignedPermutation SignedPermutation::compose(const SignedPermutation& other) const {
  SignedPermutation u;
  u.perm.resize(perm.size());
  u.sign.resize(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    u.perm[i] = perm[other.perm[i]];
    u.sign[i] = sign[other.perm[i]] * other.sign[i];
  }
  return u;
}

RMatrix SignedPermutation::conjugate(const RMatrix& rho) const {
  if (rho.rows() != perm.size() || !rho.is_square()) throw std::invalid_argument("conjugate: dimension mismatch");
  RMatrix out(rho.rows(), rho.cols());
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = 0; j < perm.size(); ++j) {
      if (rho(i, j) == 0) continue;
      out(perm[i], perm[j]) = sign[i] * sign[j] == 1 ? rho(i, j) : Rational(-rho(i, j));
    }
  return out;
}

RMatrix SignedPermutation::matrix() const {
  RMatrix m(perm.size(), perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) m(perm[i], i) = sign[i];
  return m;
}

namespace {

void require_qubit_operator(const RMatrix& rho, std::size_t n) {
  if (n < 2) throw std::invalid_argument("party count must be at least 2");
  if (!rho.is_square() || rho.rows() != (std::size_t{1} << n))
    throw std::invalid_argument("operator dimension does not match " + std::to_string(n) + " qubits");
}

SignedPermutation flip_all(std::size_t n) {
  const std::size_t d = std::size_t{1} << n;
  auto u = SignedPermutation::identity(d);
  for (std::size_t i = 0; i < d; ++i) u.perm[i] = i ^ (d - 1);
  return u;
}

// σ_z on every party whose bit is set in `mask` (party 0 = most significant bit).
SignedPermutation phase(std::size_t n, std::uint64_t mask) {
  const std::size_t d = std::size_t{1} << n;
  auto u = SignedPermutation::identity(d);
  for (std::size_t i = 0; i < d; ++i) u.sign[i] = (__builtin_popcountll(i & mask) & 1) ? -1 : 1;
  return u;
}

std::uint64_t party_bit(std::size_t n, std::size_t party) { return std::uint64_t{1} << (n - 1 - party); }

struct Branch {
  bool flip;
  std::uint64_t zz_mask;  // bit k set: step k+2 applies σ_z⊗σ_z on parties {k, N-1}
  std::uint64_t y_mask;   // y_2…y_N packed; y_1 is their parity
};

std::vector<Branch> enumerate_branches(std::size_t n) {
  std::vector<Branch> out;
  for (int flip = 0; flip < 2; ++flip)
    for (std::uint64_t zz = 0; zz < (std::uint64_t{1} << (n - 1)); ++zz)
      for (std::uint64_t y = 0; y < (std::uint64_t{1} << (n - 1)); ++y) out.push_back({flip == 1, zz, y});
  return out;
}

// Per-party σ_z exponents of the Z part of a branch.
std::vector<int> z_exponents(std::size_t n, const Branch& b) {
  std::vector<int> z(n, 0);
  for (std::size_t k = 0; k + 1 < n; ++k)
    if ((b.zz_mask >> k) & 1u) {
      z[k] ^= 1;
      z[n - 1] ^= 1;
    }
  int parity = 0;
  for (std::size_t p = 1; p < n; ++p) {
    const int y = static_cast<int>((b.y_mask >> (p - 1)) & 1u);
    z[p] ^= y;
    parity ^= y;
  }
  z[0] ^= parity;
  return z;
}

}  // namespace

std::vector<SignedPermutation> protocol_branches(std::size_t n) {
  if (n < 2) throw std::invalid_argument("party count must be at least 2");
  std::vector<SignedPermutation> out;
  const auto x_all = flip_all(n);
  for (const auto& b : enumerate_branches(n)) {
    std::uint64_t mask = 0;
    const auto z = z_exponents(n, b);
    for (std::size_t p = 0; p < n; ++p)
      if (z[p]) mask |= party_bit(n, p);
    auto u = phase(n, mask);
    if (b.flip) u = u.compose(x_all);
    out.push_back(std::move(u));
  }
  return out;
}

std::vector<std::vector<RMatrix>> protocol_branch_factors(std::size_t n) {
  if (n < 2) throw std::invalid_argument("party count must be at least 2");
  const RMatrix sx{{0, 1}, {1, 0}};
  const RMatrix sz{{1, 0}, {0, -1}};
  const RMatrix id = RMatrix::identity(2);
  std::vector<std::vector<RMatrix>> out;
  for (const auto& b : enumerate_branches(n)) {
    const auto z = z_exponents(n, b);
    std::vector<RMatrix> factors;
    for (std::size_t p = 0; p < n; ++p) {
      RMatrix f = b.flip ? sx : id;
      if (z[p]) f = sz * f;
      factors.push_back(std::move(f));
    }
    out.push_back(std::move(factors));
  }
  return out;
}

std::vector<Rational> delta_coefficients(const RMatrix& rho, std::size_t n) {
  require_qubit_operator(rho, n);
  const auto& fam = cached_family(n);
  std::vector<Rational> c;
  for (std::size_t k = 0; k < fam.size(); ++k)
    c.push_back(fam.labels[k].depolarization_weight() * trace_of_product(fam.projectors[k], rho));
  return c;
}

RMatrix delta_closed(const RMatrix& rho, std::size_t n) {
  const auto c = delta_coefficients(rho, n);
  const auto& fam = cached_family(n);
  RMatrix out(rho.rows(), rho.cols());
  for (std::size_t k = 0; k < fam.size(); ++k)
    if (c[k] != 0) out += fam.projectors[k] * c[k];
  return out;
}

RMatrix delta_pauli_steps(const RMatrix& rho, std::size_t n) {
  require_qubit_operator(rho, n);
  const auto branches = protocol_branches(n);
  RMatrix acc(rho.rows(), rho.cols());
  for (const auto& u : branches) acc += u.conjugate(rho);
  return acc * Rational(1, static_cast<unsigned long>(branches.size()));
}

std::size_t phase_branch_count(std::size_t n) {
  if (n < 2) throw std::invalid_argument("party count must be at least 2");
  return std::size_t{1} << (2 * (n - 1));
}

namespace {

// Entry (i, j) of the averaged phase step is multiplied by mean_k i^{k·(b_i − b_j)}.
const RMatrix& phase_mask(std::size_t n) {
  static std::mutex mu;
  static std::map<std::size_t, RMatrix> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  const std::size_t d = std::size_t{1} << n;
  std::vector<long> re(d * d, 0), im(d * d, 0);
  std::vector<int> k(n, 0);
  for (std::size_t code = 0; code < phase_branch_count(n); ++code) {
    int sum = 0;
    for (std::size_t p = 1; p < n; ++p) {
      k[p] = static_cast<int>((code >> (2 * (p - 1))) & 3u);
      sum += k[p];
    }
    k[0] = (4 - sum % 4) % 4;
    std::vector<int> ph(d, 0);  // exponent of i on |b⟩
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t p = 0; p < n; ++p)
        if ((b >> (n - 1 - p)) & 1u) ph[b] = (ph[b] + k[p]) % 4;
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) {
        switch ((ph[a] - ph[b] + 4) % 4) {
          case 0: ++re[a * d + b]; break;
          case 1: ++im[a * d + b]; break;
          case 2: --re[a * d + b]; break;
          case 3: --im[a * d + b]; break;
        }
      }
  }
  RMatrix mask(d, d);
  const Rational inv(1, static_cast<unsigned long>(phase_branch_count(n)));
  for (std::size_t t = 0; t < d * d; ++t) {
    // Hermitian ρ with real entries: the imaginary parts cancel entrywise.
    if (im[t] != 0) throw std::logic_error("phase_twirl: nonzero imaginary part");
    mask.data()[t] = Rational(re[t]) * inv;
  }
  return cache.emplace(n, std::move(mask)).first->second;
}

}  // namespace

RMatrix phase_twirl(const RMatrix& rho, std::size_t n) {
  require_qubit_operator(rho, n);
  const RMatrix& mask = phase_mask(n);
  RMatrix out(rho.rows(), rho.cols());
  for (std::size_t t = 0; t < rho.data().size(); ++t)
    if (rho.data()[t] != 0 && mask.data()[t] != 0) out.data()[t] = rho.data()[t] * mask.data()[t];
  return out;
}

RMatrix delta_protocol(const RMatrix& rho, std::size_t n) { return phase_twirl(delta_pauli_steps(rho, n), n); }

RMatrix delta_subset(const RMatrix& rho, const SubsystemShape& shape,
                     const std::vector<std::vector<std::size_t>>& partition) {
  shape.check(rho);
  std::vector<bool> used(shape.parties(), false);
  for (const auto& subset : partition) {
    if (subset.size() < 2) throw std::invalid_argument("delta_subset: every subset needs at least 2 parties");
    for (auto p : subset) {
      if (p >= shape.parties()) throw std::invalid_argument("delta_subset: party index out of range");
      if (used[p]) throw std::invalid_argument("delta_subset: subsets overlap");
      if (shape.dims[p] != 2) throw std::invalid_argument("delta_subset: depolarized parties must be qubits");
      used[p] = true;
    }
  }
  RMatrix current = rho;
  for (const auto& subset : partition) {
    // Bring the subset to the front, act blockwise, and move it back.
    std::vector<std::size_t> order(subset.begin(), subset.end());
    std::vector<bool> in_subset(shape.parties(), false);
    for (auto p : subset) in_subset[p] = true;
    for (std::size_t p = 0; p < shape.parties(); ++p)
      if (!in_subset[p]) order.push_back(p);
    std::vector<std::size_t> permuted_dims;
    for (auto p : order) permuted_dims.push_back(shape.dims[p]);
    const SubsystemShape permuted(permuted_dims);
    RMatrix front = permute_subsystems(current, shape, order);

    const std::size_t ds = std::size_t{1} << subset.size();
    const std::size_t dr = shape.total() / ds;
    const auto& fam = cached_family(subset.size());
    RMatrix out(front.rows(), front.cols());
    for (std::size_t k = 0; k < fam.size(); ++k) {
      const RMatrix& proj = fam.projectors[k];
      const Rational w = fam.labels[k].depolarization_weight();
      // block_k = w · tr_S[(P_k ⊗ I) front]
      RMatrix block(dr, dr);
      for (std::size_t a = 0; a < ds; ++a)
        for (std::size_t b = 0; b < ds; ++b) {
          if (proj(b, a) == 0) continue;
          for (std::size_t i = 0; i < dr; ++i)
            for (std::size_t j = 0; j < dr; ++j)
              if (front(a * dr + i, b * dr + j) != 0) block(i, j) += proj(b, a) * front(a * dr + i, b * dr + j);
        }
      if (block.is_zero()) continue;
      out += tensor(proj, block * w);
    }
    std::vector<std::size_t> inverse(order.size());
    for (std::size_t k = 0; k < order.size(); ++k) inverse[order[k]] = k;
    current = permute_subsystems(out, permuted, inverse);
  }
  return current;
}

DepolarizeReport depolarize_report(const RMatrix& rho, std::size_t n) {
  DepolarizeReport r;
  r.input = rho;
  r.closed_form_output = delta_closed(rho, n);
  r.pauli_steps_output = delta_pauli_steps(rho, n);
  r.protocol_output = phase_twirl(r.pauli_steps_output, n);
  r.labels = ghz_indices(n);
  r.coefficients = delta_coefficients(rho, n);
  return r;
}

}  // namespace ghzact
