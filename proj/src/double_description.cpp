#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <string>

#include "ghzact/polylp.hpp"

namespace ghzact {

namespace {

constexpr std::size_t kMaxRays = 200000;

using Vec = std::vector<Rational>;

Rational dot(const Vec& a, const Vec& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

class Bits {
 public:
  explicit Bits(std::size_t n = 0) : words_((n + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  Bits operator&(const Bits& o) const {
    Bits r = *this;
    for (std::size_t w = 0; w < words_.size(); ++w) r.words_[w] &= o.words_[w];
    return r;
  }
  bool subset_of(const Bits& o) const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] & ~o.words_[w]) return false;
    return true;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct Ray {
  Vec v;
  Bits zeros;
};

struct ConeGenerators {
  std::vector<Vec> rays;
  std::vector<Vec> lineality;
};

// Generators of {z : h·z <= 0 for every row h}. Rows are inserted in the
// given order.
ConeGenerators dd_cone(const std::vector<Vec>& rows, std::size_t dim) {
  const std::size_t m = rows.size();
  std::vector<Vec> lineality;
  for (std::size_t i = 0; i < dim; ++i) {
    Vec e(dim, Rational(0));
    e[i] = 1;
    lineality.push_back(std::move(e));
  }
  std::vector<Ray> rays;
  Bits processed(m);

  for (std::size_t q = 0; q < m; ++q) {
    const Vec& h = rows[q];
    auto lin_it = std::find_if(lineality.begin(), lineality.end(), [&](const Vec& l) { return dot(h, l) != 0; });
    if (lin_it != lineality.end()) {
      Vec pivot = *lin_it;
      lineality.erase(lin_it);
      Rational hp = dot(h, pivot);
      if (hp > 0) {
        for (auto& x : pivot) x = -x;
        hp = -hp;
      }
      for (auto& l : lineality) {
        const Rational f = dot(h, l) / hp;
        if (f != 0)
          for (std::size_t i = 0; i < dim; ++i) l[i] -= f * pivot[i];
      }
      for (auto& r : rays) {
        const Rational f = dot(h, r.v) / hp;
        if (f != 0)
          for (std::size_t i = 0; i < dim; ++i) r.v[i] -= f * pivot[i];
        r.v = primitive_direction(std::move(r.v));
        r.zeros.set(q);
      }
      rays.push_back({primitive_direction(std::move(pivot)), processed});
      processed.set(q);
      continue;
    }

    std::vector<Rational> s(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      s[k] = dot(h, rays[k].v);
      if (s[k] > 0)
        pos.push_back(k);
      else if (s[k] < 0)
        neg.push_back(k);
    }
    std::vector<Ray> next;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      if (s[k] > 0) continue;
      Ray r = rays[k];
      if (s[k] == 0) r.zeros.set(q);
      next.push_back(std::move(r));
    }
    const std::size_t pointed_dim = dim - lineality.size();
    for (auto p : pos)
      for (auto n : neg) {
        const Bits common = rays[p].zeros & rays[n].zeros;
        if (pointed_dim >= 2 && common.count() + 2 < pointed_dim) continue;
        bool adjacent = true;
        for (std::size_t k = 0; k < rays.size() && adjacent; ++k)
          if (k != p && k != n && common.subset_of(rays[k].zeros)) adjacent = false;
        if (!adjacent) continue;
        Vec v(dim);
        for (std::size_t i = 0; i < dim; ++i) v[i] = s[p] * rays[n].v[i] - s[n] * rays[p].v[i];
        Ray r{primitive_direction(std::move(v)), common};
        r.zeros.set(q);
        next.push_back(std::move(r));
        if (next.size() > kMaxRays) throw GuardExceeded("double description exceeded " + std::to_string(kMaxRays) + " rays");
      }
    rays = std::move(next);
    processed.set(q);
  }

  ConeGenerators out;
  for (auto& r : rays) out.rays.push_back(std::move(r.v));
  for (auto& l : lineality) out.lineality.push_back(primitive_direction(std::move(l)));
  return out;
}

std::size_t nonzeros(const Vec& v) {
  return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](const Rational& q) { return q != 0; }));
}

std::vector<std::size_t> insertion_order(const std::vector<Vec>& rows) {
  std::vector<std::size_t> order(rows.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return nonzeros(rows[a]) < nonzeros(rows[b]); });
  return order;
}

void sort_unique(std::vector<Vec>& vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

}  // namespace

std::vector<Rational> primitive_direction(std::vector<Rational> v) {
  mpz_class lcm_den = 1, gcd_num = 0;
  for (const auto& q : v) {
    if (q == 0) continue;
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), q.get_den_mpz_t());
    mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), q.get_num_mpz_t());
  }
  if (gcd_num == 0) return v;
  const Rational scale(lcm_den, gcd_num);
  for (auto& q : v) {
    q *= scale;
    q.canonicalize();
  }
  return v;
}

std::size_t max_enumeration_dim() {
  if (const char* env = std::getenv("ARTIFACT_MAX_DIM")) {
    try {
      return static_cast<std::size_t>(std::stoul(env));
    } catch (const std::exception&) {
    }
  }
  return 20;
}

Polyhedron enumerate_polyhedron(const LinearSystem& system, std::size_t max_dim) {
  const std::size_t d = system.dimension();
  if (d > max_dim)
    throw GuardExceeded("enumeration guard: " + std::to_string(d) + " variables exceeds limit " + std::to_string(max_dim));
  // Homogenize: z = (x, t), rows (a, c) and −t <= 0 first.
  std::vector<Vec> rows;
  Vec t_row(d + 1, Rational(0));
  t_row[d] = -1;
  std::vector<Vec> body;
  for (const auto& r : system.rows()) {
    Vec h = r.coefficients;
    h.push_back(r.constant);
    body.push_back(std::move(h));
  }
  rows.push_back(t_row);
  for (auto i : insertion_order(body)) rows.push_back(body[i]);

  const auto gens = dd_cone(rows, d + 1);
  Polyhedron poly;
  for (const auto& v : gens.rays) {
    if (v[d] > 0) {
      Vec x(v.begin(), v.end() - 1);
      for (auto& c : x) c /= v[d];
      poly.vertices.push_back(std::move(x));
    } else {
      poly.rays.push_back(Vec(v.begin(), v.end() - 1));
    }
  }
  for (const auto& l : gens.lineality) poly.lineality.push_back(Vec(l.begin(), l.end() - 1));
  if (poly.vertices.empty()) {
    // Infeasible: the homogenized cone only has t = 0 directions.
    poly.rays.clear();
    poly.lineality.clear();
  }
  sort_unique(poly.vertices);
  sort_unique(poly.rays);
  return poly;
}

LinearSystem h_form(const Polyhedron& poly, const std::vector<std::string>& variables) {
  const std::size_t d = variables.size();
  LinearSystem out(variables);
  if (poly.vertices.empty()) {
    LinearInequality contradiction;
    contradiction.coefficients.assign(d, Rational(0));
    contradiction.constant = 1;
    out.add(contradiction, "v-form");
    return out;
  }
  std::vector<Vec> gens;
  for (const auto& v : poly.vertices) {
    Vec g = v;
    g.push_back(1);
    gens.push_back(std::move(g));
  }
  for (const auto& r : poly.rays) {
    Vec g = r;
    g.push_back(0);
    gens.push_back(std::move(g));
  }
  for (const auto& l : poly.lineality) {
    Vec g = l;
    g.push_back(0);
    gens.push_back(g);
    for (auto& c : g) c = -c;
    gens.push_back(std::move(g));
  }
  std::vector<Vec> rows;
  for (auto i : insertion_order(gens)) rows.push_back(gens[i]);
  const auto polar = dd_cone(rows, d + 1);
  auto emit = [&](const Vec& h) {
    LinearInequality ineq;
    ineq.coefficients.assign(h.begin(), h.end() - 1);
    ineq.constant = h[d];
    if (!ineq.is_trivial()) out.add(ineq, "v-form");
  };
  for (const auto& h : polar.rays) emit(h);
  for (auto h : polar.lineality) {
    emit(h);
    for (auto& c : h) c = -c;
    emit(h);
  }
  return out;
}

bool generators_satisfy(const Polyhedron& poly, const LinearSystem& system) {
  for (const auto& v : poly.vertices)
    if (!system.satisfied_by(v)) return false;
  for (const auto& row : system.rows()) {
    for (const auto& r : poly.rays) {
      Rational s = 0;
      for (std::size_t j = 0; j < r.size(); ++j) s += row.coefficients[j] * r[j];
      if (s > 0) return false;
    }
    for (const auto& l : poly.lineality) {
      Rational s = 0;
      for (std::size_t j = 0; j < l.size(); ++j) s += row.coefficients[j] * l[j];
      if (s != 0) return false;
    }
  }
  return true;
}

}  // namespace ghzact
