#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ghzact/activation.hpp"
#include "ghzact/checks.hpp"
#include "ghzact/depolarize.hpp"
#include "ghzact/io.hpp"
#include "ghzact/seesaw.hpp"

namespace py = pybind11;
using namespace ghzact;

namespace {

// Exact matrices cross the boundary as nested lists of "p/q" strings.
using TextMatrix = std::vector<std::vector<std::string>>;

RMatrix from_text(const TextMatrix& m) {
  const std::size_t rows = m.size(), cols = rows ? m.front().size() : 0;
  RMatrix out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (m[i].size() != cols) throw std::invalid_argument("ragged matrix");
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = parse_rational(m[i][j]);
  }
  return out;
}

TextMatrix to_text(const RMatrix& m) {
  TextMatrix out(m.rows(), std::vector<std::string>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = to_string(m(i, j));
  return out;
}

std::string dump(const Report& r) { return r.to_json(std::nullopt).dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact GHZ-activation checks";
  m.attr("__version__") = kVersion;

  m.def("catalog_names", &catalog_names);
  m.def("catalog_state", [](const std::string& name, std::size_t n) { return to_text(catalog_state(name, n)); });
  m.def("ghz_projector", [](std::size_t n) { return to_text(ghz_projector(n)); });
  m.def("delta_closed", [](const TextMatrix& rho, std::size_t n) { return to_text(delta_closed(from_text(rho), n)); });
  m.def("delta_protocol", [](const TextMatrix& rho, std::size_t n) { return to_text(delta_protocol(from_text(rho), n)); });
  m.def("delta_coefficients", [](const TextMatrix& rho, std::size_t n) {
    std::vector<std::string> out;
    for (const auto& q : delta_coefficients(from_text(rho), n)) out.push_back(to_string(q));
    return out;
  });
  m.def("is_psd", [](const TextMatrix& a) { return psd_check(from_text(a)).is_psd(); });
  m.def("witness_value",
        [](const TextMatrix& rho, const TextMatrix& sigma, const std::vector<std::size_t>& h_dims, const std::string& lambda) {
          const LambdaParam l = LambdaParam::parse(lambda);
          const RMatrix r = from_text(rho), s = from_text(sigma);
          const Witness w = witness_from_rho(r, h_dims, l);
          return py::make_tuple(to_string(w.value(s)), to_string(condition_value(r, s, h_dims, l)),
                                w.valid());
        },
        py::arg("rho"), py::arg("sigma"), py::arg("h_dims"), py::arg("lambda_"));

  // Reports are returned as JSON text; the Python layer decodes them.
  m.def("report_depolarization", [](std::size_t n, std::size_t trials, std::uint64_t seed) {
    Json arr = Json::array();
    for (const auto& r : check_depolarization(n, trials, seed)) arr.push_back(r.to_json(std::nullopt));
    return arr.dump();
  });
  m.def("report_ppt", [](std::size_t n, std::size_t trials, std::uint64_t seed) { return dump(check_ppt(n, trials, seed)); });
  m.def("report_jamiolkowski", [](std::size_t n) { return dump(check_jamiolkowski(n)); });
  m.def("report_lemma1", [](std::size_t n, const std::string& lambda) {
    const LambdaParam l = LambdaParam::parse(lambda);
    return dump(l.value() == Rational(1, 2) ? check_cone(n) : check_lemma1(n, l));
  });
  m.def("report_cone", [](std::size_t n) { return dump(check_cone(n)); });
  m.def("report_filter_identity", [](std::size_t n, std::size_t trials, std::size_t z, std::uint64_t seed) {
    return dump(check_filter_identity(n, trials, z, seed));
  });
  m.def("report_witness_consistency",
        [](std::size_t n, std::size_t trials, std::uint64_t seed) { return dump(check_witness_consistency(n, trials, seed)); });
  m.def("report_shifts", [] { return dump(check_shifts()); });
  m.def("report_dominance",
        [](std::size_t n, std::size_t trials, std::uint64_t seed) { return dump(check_dominance(n, trials, seed)); });

  m.def("seesaw",
        [](const Eigen::MatrixXd& rho, const std::vector<std::size_t>& dims, std::size_t iters, std::size_t restarts,
           std::uint64_t seed) {
          SeesawResult r;
          {
            py::gil_scoped_release release;
            r = seesaw_estimate(rho, dims, SeesawOptions{iters, restarts, seed});
          }
          py::list histories;
          for (const auto& run : r.runs) histories.append(run.history);
          py::dict out;
          out["lower_bound"] = r.lower_bound;
          out["best_objective"] = r.best_objective;
          out["monotone"] = r.monotone;
          out["histories"] = histories;
          return out;
        },
        py::arg("rho"), py::arg("dims"), py::arg("iters") = 50, py::arg("restarts") = 8, py::arg("seed") = 0);
}
