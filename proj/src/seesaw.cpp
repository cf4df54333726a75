#include "ghzact/seesaw.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <thread>

namespace ghzact {

namespace {

Eigen::MatrixXd ghz_float(std::size_t n) {
  const Eigen::Index d = Eigen::Index{1} << n;
  Eigen::MatrixXd phi = Eigen::MatrixXd::Zero(d, d);
  phi(0, 0) = phi(0, d - 1) = phi(d - 1, 0) = phi(d - 1, d - 1) = 0.5;
  return phi;
}

Eigen::MatrixXd kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  Eigen::MatrixXd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// ⊗ filters, with party `skip` (if any) replaced by the identity on its input.
Eigen::MatrixXd product_filter(const std::vector<Eigen::MatrixXd>& filters, const std::vector<std::size_t>& dims,
                               std::size_t skip) {
  Eigen::MatrixXd op = Eigen::MatrixXd::Identity(1, 1);
  for (std::size_t p = 0; p < filters.size(); ++p)
    op = kron(op, p == skip ? Eigen::MatrixXd::Identity(dims[p], dims[p]) : filters[p]);
  return op;
}

class Optimizer {
 public:
  Optimizer(const Eigen::MatrixXd& rho, const std::vector<std::size_t>& dims)
      : rho_(rho), dims_(dims), n_(dims.size()), phi_(ghz_float(dims.size())) {}

  double objective(const std::vector<Eigen::MatrixXd>& filters) const {
    const Eigen::MatrixXd m = product_filter(filters, dims_, n_);
    const Eigen::MatrixXd out = m * rho_ * m.transpose();
    const double t = out.trace();
    return t > 0 ? (out.cwiseProduct(phi_)).sum() / t : 0.0;
  }

  // Best M_p with the other filters fixed: maximize xᵀAx / xᵀBx, x = vec(M_p) row-major.
  void update(std::vector<Eigen::MatrixXd>& filters, std::size_t p) const {
    const Eigen::MatrixXd l = product_filter(filters, dims_, p);
    const Eigen::MatrixXd reduced = l * rho_ * l.transpose();
    const std::size_t d = dims_[p];
    const std::size_t low = std::size_t{1} << (n_ - 1 - p);  // qubits after party p
    const std::size_t rest = std::size_t{1} << (n_ - 1);
    auto in_index = [&](std::size_t a, std::size_t r) { return ((r / low) * d + a) * low + r % low; };
    auto out_index = [&](std::size_t i, std::size_t r) { return ((r / low) * 2 + i) * low + r % low; };

    const Eigen::Index size = static_cast<Eigen::Index>(2 * d);
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(size, size), b = Eigen::MatrixXd::Zero(size, size);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t x = 0; x < d; ++x)
          for (std::size_t y = 0; y < d; ++y) {
            double num = 0, den = 0;
            for (std::size_t r = 0; r < rest; ++r) {
              for (std::size_t s = 0; s < rest; ++s) {
                const double phi = phi_(out_index(i, r), out_index(j, s));
                if (phi != 0) num += reduced(in_index(x, r), in_index(y, s)) * phi;
              }
              if (i == j) den += reduced(in_index(x, r), in_index(y, r));
            }
            a(i * d + x, j * d + y) = num;
            b(i * d + x, j * d + y) = den;
          }

    // Whiten on the range of B; A vanishes on its kernel because 0 <= Φ <= 𝕀.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eb(b);
    const double top = eb.eigenvalues().cwiseAbs().maxCoeff();
    if (!(top > 0)) return;
    std::vector<Eigen::Index> keep;
    for (Eigen::Index k = 0; k < size; ++k)
      if (eb.eigenvalues()(k) > 1e-12 * top) keep.push_back(k);
    Eigen::MatrixXd w(size, static_cast<Eigen::Index>(keep.size()));
    for (std::size_t c = 0; c < keep.size(); ++c)
      w.col(static_cast<Eigen::Index>(c)) = eb.eigenvectors().col(keep[c]) / std::sqrt(eb.eigenvalues()(keep[c]));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ea(w.transpose() * a * w);
    const Eigen::VectorXd x = w * ea.eigenvectors().col(ea.eigenvalues().size() - 1);

    Eigen::MatrixXd m(2, d);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t c = 0; c < d; ++c) m(i, c) = x(i * d + c);
    const double norm = m.norm();
    if (!(norm > 0)) return;
    std::vector<Eigen::MatrixXd> trial = filters;
    trial[p] = m / norm;
    // Rounding can make the eigen-solution marginally worse; keep the old filter then.
    if (objective(trial) >= objective(filters)) filters = std::move(trial);
  }

 private:
  const Eigen::MatrixXd& rho_;
  const std::vector<std::size_t>& dims_;
  std::size_t n_;
  Eigen::MatrixXd phi_;
};

std::uint64_t restart_seed(std::uint64_t master, std::size_t k) {
  std::seed_seq seq{static_cast<std::uint32_t>(master), static_cast<std::uint32_t>(master >> 32),
                    static_cast<std::uint32_t>(k)};
  std::uint32_t out[2];
  seq.generate(out, out + 2);
  return (std::uint64_t{out[0]} << 32) | out[1];
}

SeesawRun run_one(const Optimizer& opt, const std::vector<std::size_t>& dims, const SeesawOptions& opts,
                  std::size_t k) {
  SeesawRun run;
  run.seed = restart_seed(opts.seed, k);
  std::mt19937_64 rng(run.seed);
  std::normal_distribution<double> normal;
  for (auto d : dims) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(2, static_cast<Eigen::Index>(d));
    if (k == 0) {
      for (std::size_t i = 0; i < std::min<std::size_t>(2, d); ++i) m(i, i) = 1;
    } else {
      for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = normal(rng);
    }
    run.filters.push_back(m / m.norm());
  }
  run.history.push_back(opt.objective(run.filters));
  for (std::size_t it = 0; it < opts.iters; ++it) {
    for (std::size_t p = 0; p < dims.size(); ++p) opt.update(run.filters, p);
    const double v = opt.objective(run.filters);
    if (v < run.history.back() - opts.slack) run.monotone = false;
    run.history.push_back(v);
  }
  run.best = *std::max_element(run.history.begin(), run.history.end());
  return run;
}

}  // namespace

Eigen::MatrixXd to_eigen(const RMatrix& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).get_d();
  return out;
}

double filter_objective(const Eigen::MatrixXd& rho, const std::vector<std::size_t>& dims,
                        const std::vector<Eigen::MatrixXd>& filters) {
  return Optimizer(rho, dims).objective(filters);
}

SeesawResult seesaw_estimate(const Eigen::MatrixXd& rho, const std::vector<std::size_t>& dims,
                             const SeesawOptions& opts) {
  if (dims.size() < 2) throw std::invalid_argument("seesaw needs at least two parties");
  std::size_t total = 1;
  for (auto d : dims) {
    if (d < 1) throw std::invalid_argument("local dimension must be positive");
    total *= d;
  }
  if (rho.rows() != static_cast<Eigen::Index>(total) || rho.cols() != rho.rows())
    throw std::invalid_argument("state does not match the local dimensions");
  if ((rho - rho.transpose()).cwiseAbs().maxCoeff() > 1e-9) throw std::invalid_argument("state is not symmetric");
  const double scale = std::max(1.0, rho.cwiseAbs().maxCoeff());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(rho, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-9 * scale) throw std::invalid_argument("state is not positive semidefinite");
  if (!(rho.trace() > 0)) throw std::invalid_argument("state has zero trace");

  const Optimizer opt(rho, dims);
  const std::size_t restarts = std::max<std::size_t>(opts.restarts, 1);
  SeesawResult result;
  result.runs.resize(restarts);
  std::vector<std::thread> pool;
  for (std::size_t k = 0; k < restarts; ++k)
    pool.emplace_back([&, k] { result.runs[k] = run_one(opt, dims, opts, k); });
  for (auto& t : pool) t.join();

  for (const auto& r : result.runs) {
    result.best_objective = std::max(result.best_objective, r.best);
    result.monotone = result.monotone && r.monotone;
  }
  result.lower_bound = std::max(0.5, result.best_objective);
  return result;
}

}  // namespace ghzact
