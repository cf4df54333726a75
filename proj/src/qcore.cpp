#include "ghzact/qcore.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace ghzact {

namespace {

void require_parties(std::size_t n) {
  if (n < 2) throw std::invalid_argument("party count must be at least 2");
  if (n > 20) throw std::invalid_argument("party count too large");
}

}  // namespace

std::string BitString::str() const {
  std::string s(n, '0');
  for (std::size_t k = 0; k < n; ++k) s[k] = bit(k) ? '1' : '0';
  return s;
}

std::string GhzIndex::label() const {
  switch (kind) {
    case Kind::plus:
      return "+";
    case Kind::minus:
      return "-";
    default:
      return std::to_string(x);
  }
}

std::size_t even_count(std::size_t n) {
  require_parties(n);
  return (std::size_t{1} << (n - 1)) - 1;
}

std::vector<GhzIndex> ghz_indices(std::size_t n) {
  require_parties(n);
  std::vector<GhzIndex> out{GhzIndex::plus(), GhzIndex::minus()};
  for (std::uint64_t x = 2; x < (std::uint64_t{1} << n); x += 2) out.push_back(GhzIndex::even(x));
  return out;
}

std::size_t index_position(const GhzIndex& r, std::size_t n) {
  switch (r.kind) {
    case GhzIndex::Kind::plus:
      return 0;
    case GhzIndex::Kind::minus:
      return 1;
    default:
      if (r.x == 0 || (r.x & 1u) || r.x >= (std::uint64_t{1} << n))
        throw std::invalid_argument("not an even non-zero " + std::to_string(n) + "-bit string: " + std::to_string(r.x));
      return 1 + r.x / 2;
  }
}

GhzIndex parse_ghz_index(const std::string& label, std::size_t n) {
  if (label == "+") return GhzIndex::plus();
  if (label == "-") return GhzIndex::minus();
  GhzIndex r = GhzIndex::even(std::stoull(label));
  index_position(r, n);
  return r;
}

RMatrix ghz_projector(std::size_t n) {
  require_parties(n);
  const std::size_t d = std::size_t{1} << n;
  RMatrix phi(d, d);
  const Rational half(1, 2);
  phi(0, 0) = phi(0, d - 1) = phi(d - 1, 0) = phi(d - 1, d - 1) = half;
  return phi;
}

ProjectorFamily projector_family(std::size_t n) {
  require_parties(n);
  const std::size_t d = std::size_t{1} << n;
  ProjectorFamily fam;
  fam.n = n;
  fam.labels = ghz_indices(n);
  const Rational half(1, 2);
  for (const auto& r : fam.labels) {
    RMatrix p(d, d);
    if (r.is_even()) {
      const std::size_t x = r.x, xbar = (d - 1) ^ r.x;
      p(x, x) = p(xbar, xbar) = half;
    } else {
      const Rational off = r.kind == GhzIndex::Kind::plus ? half : -half;
      p(0, 0) = p(d - 1, d - 1) = half;
      p(0, d - 1) = p(d - 1, 0) = off;
    }
    fam.projectors.push_back(std::move(p));
  }
  return fam;
}

const ProjectorFamily& cached_family(std::size_t n) {
  static std::mutex mu;
  static std::map<std::size_t, std::unique_ptr<ProjectorFamily>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<ProjectorFamily>(projector_family(n));
  return *slot;
}

std::vector<std::vector<Rational>> shifts_upb_vectors() {
  const std::vector<Rational> zero{1, 0}, one{0, 1}, plus{1, 1}, minus{1, -1};
  auto product = [](const std::vector<Rational>& a, const std::vector<Rational>& b, const std::vector<Rational>& c) {
    std::vector<Rational> v;
    for (const auto& x : a)
      for (const auto& y : b)
        for (const auto& z : c) v.push_back(x * y * z);
    return v;
  };
  return {product(zero, one, plus), product(one, plus, zero), product(plus, zero, one), product(minus, minus, minus)};
}

RMatrix shifts_state() {
  // Gram–Schmidt over the rationals, accumulating the projector onto the span.
  std::vector<std::vector<Rational>> ortho;
  RMatrix span_projector(8, 8);
  for (auto v : shifts_upb_vectors()) {
    for (const auto& u : ortho) {
      Rational uv = 0, uu = 0;
      for (std::size_t k = 0; k < 8; ++k) {
        uv += u[k] * v[k];
        uu += u[k] * u[k];
      }
      const Rational f = uv / uu;
      for (std::size_t k = 0; k < 8; ++k) v[k] -= f * u[k];
    }
    Rational norm2 = 0;
    for (const auto& c : v) norm2 += c * c;
    if (norm2 == 0) throw std::logic_error("shifts basis vectors are linearly dependent");
    span_projector += RMatrix::outer(v, v) * (Rational(1) / norm2);
    ortho.push_back(std::move(v));
  }
  RMatrix complement = RMatrix::identity(8) - span_projector;
  return complement * (Rational(1) / complement.trace());
}

RMatrix all_zero_state(std::size_t n) {
  require_parties(n);
  const std::size_t d = std::size_t{1} << n;
  RMatrix m(d, d);
  m(0, 0) = 1;
  return m;
}

RMatrix max_mixed_state(std::size_t n) {
  require_parties(n);
  const std::size_t d = std::size_t{1} << n;
  return RMatrix::identity(d) * Rational(1, static_cast<unsigned long>(d));
}

std::vector<std::string> catalog_names() { return {"ghz", "all-zero", "shifts", "max-mixed"}; }

RMatrix catalog_state(const std::string& name, std::size_t n) {
  if (name == "ghz") return ghz_projector(n);
  if (name == "all-zero") return all_zero_state(n);
  if (name == "max-mixed") return max_mixed_state(n);
  if (name == "shifts") {
    if (n != 3) throw std::invalid_argument("the shifts state is defined for 3 parties only");
    return shifts_state();
  }
  throw std::invalid_argument("unknown catalog state: " + name);
}

}  // namespace ghzact
