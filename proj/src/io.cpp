#include "ghzact/io.hpp"

#include <fstream>
#include <sstream>

namespace ghzact {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::size_t count_from_json(const Json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    throw FormatError(std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

std::vector<std::size_t> dims_from_json(const Json& j, const char* what) {
  if (!j.is_array()) throw FormatError(std::string(what) + " must be an array");
  std::vector<std::size_t> dims;
  for (const auto& d : j) dims.push_back(count_from_json(d, what));
  return dims;
}

}  // namespace

Json rational_json(const Rational& q) { return to_string(q); }

Json vector_json(std::span<const Rational> v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(rational_json(q));
  return out;
}

Rational rational_from_json(const Json& j) {
  try {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  throw FormatError("rational entries must be \"p/q\" strings or integers, got " + j.dump());
}

Json matrix_to_json(const RMatrix& m) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) entries.push_back(vector_json(m.data().subspan(i * m.cols(), m.cols())));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

RMatrix matrix_from_json(const Json& j) {
  const std::size_t rows = count_from_json(field(j, "rows"), "rows");
  const std::size_t cols = count_from_json(field(j, "cols"), "cols");
  const Json& entries = field(j, "entries");
  if (!entries.is_array() || entries.size() != rows) throw FormatError("entries must hold one array per row");
  RMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!entries[i].is_array() || entries[i].size() != cols) throw FormatError("row " + std::to_string(i) + " has wrong length");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = rational_from_json(entries[i][c]);
  }
  return m;
}

Json map_to_json(const SeparableMap& map) {
  Json terms = Json::array();
  for (const auto& t : map.terms()) {
    Json factors = Json::array();
    for (const auto& f : t.factors) factors.push_back(matrix_to_json(f));
    terms.push_back(Json{{"weight", rational_json(t.weight)}, {"factors", factors}});
  }
  return Json{{"input_dims", map.input_dims()}, {"output_dims", map.output_dims()}, {"terms", terms}};
}

SeparableMap map_from_json(const Json& j) {
  const Json& terms = field(j, "terms");
  if (!terms.is_array() || terms.empty()) throw FormatError("terms must be a non-empty array");
  std::vector<KrausTerm> parsed;
  for (const auto& t : terms) {
    KrausTerm term;
    const Json* factors = &t;
    if (t.is_object()) {
      if (t.contains("weight")) term.weight = rational_from_json(t.at("weight"));
      factors = &field(t, "factors");
    }
    if (!factors->is_array() || factors->empty()) throw FormatError("each term needs a non-empty factor list");
    for (const auto& f : *factors) term.factors.push_back(matrix_from_json(f));
    parsed.push_back(std::move(term));
  }
  std::vector<std::size_t> in, out;
  if (j.contains("input_dims") || j.contains("output_dims")) {
    in = dims_from_json(field(j, "input_dims"), "input_dims");
    out = dims_from_json(field(j, "output_dims"), "output_dims");
  } else {
    for (const auto& f : parsed.front().factors) {
      out.push_back(f.rows());
      in.push_back(f.cols());
    }
  }
  if (j.contains("n") && count_from_json(j.at("n"), "n") != in.size()) throw FormatError("n disagrees with the factor count");
  try {
    SeparableMap map(in, out);
    for (auto& t : parsed) map.add_term(std::move(t));
    return map;
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

Json system_to_json(const LinearSystem& system) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < system.size(); ++i)
    rows.push_back(Json{{"tag", system.tag(i)},
                        {"label", system.label(i)},
                        {"constant", rational_json(system.row(i).constant)},
                        {"coefficients", vector_json(system.row(i).coefficients)}});
  return Json{{"variables", system.variables()}, {"rows", rows}};
}

LinearSystem system_from_json(const Json& j) {
  const Json& vars = field(j, "variables");
  if (!vars.is_array()) throw FormatError("variables must be an array");
  std::vector<std::string> names;
  for (const auto& v : vars) {
    if (!v.is_string()) throw FormatError("variable names must be strings");
    names.push_back(v.get<std::string>());
  }
  LinearSystem system(names);
  const Json& rows = field(j, "rows");
  if (!rows.is_array()) throw FormatError("rows must be an array");
  for (const auto& r : rows) {
    LinearInequality ineq;
    ineq.constant = rational_from_json(field(r, "constant"));
    const Json& coeffs = field(r, "coefficients");
    if (!coeffs.is_array() || coeffs.size() != names.size()) throw FormatError("coefficient count must match variables");
    for (const auto& c : coeffs) ineq.coefficients.push_back(rational_from_json(c));
    system.add(ineq, r.value("tag", std::string()), r.value("label", std::string()));
  }
  return system;
}

Json polyhedron_to_json(const Polyhedron& poly) {
  auto list = [](const std::vector<std::vector<Rational>>& vs) {
    Json out = Json::array();
    for (const auto& v : vs) out.push_back(vector_json(v));
    return out;
  };
  return Json{{"vertices", list(poly.vertices)}, {"rays", list(poly.rays)}, {"lineality", list(poly.lineality)}};
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json_file(const std::string& path) {
  try {
    return Json::parse(read_text_file(path));
  } catch (const Json::exception& e) {
    throw FormatError(path + ": " + e.what());
  }
}

LinearSystem read_system_file(const std::string& path) {
  const std::string text = read_text_file(path);
  const Json j = Json::parse(text, nullptr, false);
  if (!j.is_discarded()) {
    try {
      return system_from_json(j);
    } catch (const Json::exception& e) {
      throw FormatError(path + ": " + e.what());
    }
  }
  try {
    return parse_h_text(text);
  } catch (const std::exception& e) {
    throw FormatError(path + ": " + e.what());
  }
}

}  // namespace ghzact
