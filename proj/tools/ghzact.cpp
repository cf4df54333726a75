// Command-line front end. Exit codes: 0 every report passed, 1 some report
// did not pass, 2 usage error, 3 malformed input, 4 enumeration guard exceeded.

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "ghzact/checks.hpp"

using namespace ghzact;

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kMalformed = 3, kGuard = 4 };

// "catalog:<name>:<n>" selects a built-in state; anything else is a matrix JSON file.
RMatrix load_state(const std::string& spec) {
  const std::string prefix = "catalog:";
  if (spec.rfind(prefix, 0) == 0) {
    const std::string rest = spec.substr(prefix.size());
    const auto colon = rest.find(':');
    const std::string name = rest.substr(0, colon);
    std::size_t n = name == "shifts" ? 3 : 2;
    if (colon != std::string::npos) {
      try {
        n = std::stoul(rest.substr(colon + 1));
      } catch (const std::exception&) {
        throw FormatError("bad party count in " + spec);
      }
    }
    try {
      return catalog_state(name, n);
    } catch (const std::invalid_argument& e) {
      throw FormatError(e.what());
    }
  }
  return matrix_from_json(read_json_file(spec));
}

std::size_t qubits_of(std::size_t dim, const char* what) {
  std::size_t n = 0;
  while ((std::size_t{1} << n) < dim) ++n;
  if ((std::size_t{1} << n) != dim) throw FormatError(std::string(what) + " dimension is not a power of two");
  return n;
}

// All parties equal when --h-dims is absent: Π h = dim(σ), Π 2 = dim(ρ)/dim(σ).
std::vector<std::size_t> infer_h_dims(const RMatrix& rho, const RMatrix& sigma, std::vector<std::size_t> given) {
  if (!given.empty()) return given;
  if (sigma.rows() == 0 || rho.rows() % sigma.rows() != 0) throw FormatError("rho and sigma dimensions are incompatible");
  const std::size_t n = qubits_of(rho.rows() / sigma.rows(), "K");
  const auto h = static_cast<std::size_t>(std::llround(std::pow(static_cast<double>(sigma.rows()), 1.0 / static_cast<double>(n))));
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= h;
  if (total != sigma.rows()) throw FormatError("cannot split sigma into equal local dimensions; pass --h-dims");
  return std::vector<std::size_t>(n, h);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for GHZ-fidelity activation"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json", out_path;
  bool timing = false;
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", out_path, "Write reports to this file instead of stdout");
  app.add_flag("--timing", timing, "Include runtime_ms in JSON reports");

  std::size_t n = 2, trials = 25, z_count = 10, iters = 50, restarts = 8;
  std::uint64_t seed = 1;
  std::string lambda_text = "3/4", file_a, file_b;
  std::vector<std::size_t> dims;

  auto* dep = app.add_subcommand("verify-depolarization", "Closed-form Δ against the LOCC protocol mixture");
  dep->add_option("--n", n)->required()->check(CLI::Range(2, 6));
  dep->add_option("--trials", trials);
  dep->add_option("--seed", seed);

  auto* ppt = app.add_subcommand("verify-ppt", "Symbolic PPT families against exact partial-transpose PSD checks");
  ppt->add_option("--n", n)->required()->check(CLI::Range(2, 4));
  ppt->add_option("--trials", trials);
  ppt->add_option("--seed", seed);

  auto* l1 = app.add_subcommand("verify-lemma1", "Uniqueness of the reduced solution with Farkas certificates");
  l1->add_option("--n", n)->required()->check(CLI::Range(2, 8));
  l1->add_option("--lambda", lambda_text)->required();

  auto* cone = app.add_subcommand("verify-cone", "Solution cone at lambda = 1/2");
  cone->add_option("--n", n)->required()->check(CLI::Range(2, 8));

  auto* l2 = app.add_subcommand("verify-lemma2", "Decompose (I ⊗ Δ)∘Ω∘Δ(λI − Φ) for a separable map");
  l2->add_option("--map", file_a)->required();
  l2->add_option("--lambda", lambda_text);

  auto* fid = app.add_subcommand("verify-filter-identity", "Filter identity on random rational inputs");
  fid->add_option("--n", n)->required()->check(CLI::Range(2, 3));
  fid->add_option("--trials", trials);
  fid->add_option("--z", z_count, "Operators Z per trial");
  fid->add_option("--seed", seed);

  auto* wit = app.add_subcommand("witness", "Witness from rho evaluated on sigma");
  std::size_t search_trials = 0;
  auto* rho_opt = wit->add_option("--rho", file_a);
  auto* search_opt = wit->add_option("--search-trials", search_trials,
                                     "Search for a separable rho that activates sigma (heuristic)");
  rho_opt->excludes(search_opt);
  wit->add_option("--sigma", file_b)->required();
  wit->add_option("--lambda", lambda_text)->required();
  wit->add_option("--h-dims", dims, "Local dimensions of H");
  wit->add_option("--seed", seed);

  auto* fidelity = app.add_subcommand("fidelity", "Exact GHZ fidelity after a product filter or separable map");
  fidelity->add_option("--state", file_a)->required();
  fidelity->add_option("--filter", file_b)->required();

  auto* see = app.add_subcommand("seesaw", "Floating-point lower bound on E");
  see->add_option("--state", file_a)->required();
  see->add_option("--iters", iters);
  see->add_option("--restarts", restarts);
  see->add_option("--seed", seed);
  see->add_option("--dims", dims, "Local input dimensions (default: qubits)");

  auto* en = app.add_subcommand("enumerate", "Vertices and rays of an H-form system (text or JSON)");
  en->add_option("--system", file_a)->required();

  auto* cat = app.add_subcommand("catalog", "List the built-in states");
  std::string show;
  cat->add_option("--n", n)->check(CLI::Range(2, 6));
  cat->add_option("--show", show, "Print one state as matrix JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (wit->parsed() && rho_opt->count() == 0 && search_opt->count() == 0) {
    std::cerr << "witness: --rho or --search-trials is required\n";
    return kUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  std::vector<Report> reports;
  try {
    if (dep->parsed()) {
      reports = check_depolarization(n, trials, seed);
    } else if (ppt->parsed()) {
      reports.push_back(check_ppt(n, trials, seed));
    } else if (l1->parsed()) {
      const LambdaParam lambda = LambdaParam::parse(lambda_text);
      reports.push_back(lambda.value() == Rational(1, 2) ? check_cone(n) : check_lemma1(n, lambda));
    } else if (cone->parsed()) {
      reports.push_back(check_cone(n));
    } else if (l2->parsed()) {
      reports.push_back(check_lemma2(map_from_json(read_json_file(file_a)), LambdaParam::parse(lambda_text)));
    } else if (fid->parsed()) {
      reports.push_back(check_filter_identity(n, trials, z_count, seed));
    } else if (wit->parsed() && search_opt->count() > 0) {
      const RMatrix sigma = load_state(file_b);
      if (dims.empty()) dims.assign(qubits_of(sigma.rows(), "sigma"), 2);
      reports.push_back(activation_search_report(sigma, dims, LambdaParam::parse(lambda_text), search_trials, seed));
    } else if (wit->parsed()) {
      const RMatrix rho = load_state(file_a), sigma = load_state(file_b);
      reports.push_back(witness_report(rho, sigma, infer_h_dims(rho, sigma, dims), LambdaParam::parse(lambda_text)));
    } else if (fidelity->parsed()) {
      reports.push_back(fidelity_report(load_state(file_a), map_from_json(read_json_file(file_b))));
    } else if (see->parsed()) {
      const RMatrix state = load_state(file_a);
      if (dims.empty()) dims.assign(qubits_of(state.rows(), "state"), 2);
      reports.push_back(seesaw_report(state, dims, SeesawOptions{iters, restarts, seed}));
    } else if (en->parsed()) {
      reports.push_back(enumerate_report(read_system_file(file_a)));
    } else if (cat->parsed()) {
      Report r = catalog_report(n);
      if (!show.empty()) r.details["matrix"] = matrix_to_json(catalog_state(show, show == "shifts" ? 3 : n));
      reports.push_back(std::move(r));
    }
  } catch (const GuardExceeded& e) {
    std::cerr << "guard exceeded: " << e.what() << "\n";
    return kGuard;
  } catch (const FormatError& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return kMalformed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kMalformed;
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  std::string text;
  if (format == "text") {
    for (const auto& r : reports) text += r.to_text();
  } else {
    std::optional<double> runtime;
    if (timing) runtime = ms / static_cast<double>(reports.size());
    Json doc;
    if (reports.size() == 1) {
      doc = reports.front().to_json(runtime);
    } else {
      doc = Json::array();
      for (const auto& r : reports) doc.push_back(r.to_json(runtime));
    }
    text = doc.dump(2) + "\n";
  }
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "cannot write " << out_path << "\n";
      return kMalformed;
    }
    out << text;
  }
  bool all = !reports.empty();
  for (const auto& r : reports) all = all && r.passed();
  return all ? kPass : kFail;
}
