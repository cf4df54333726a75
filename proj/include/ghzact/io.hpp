#pragma once

// JSON and text formats for matrices, separable maps, inequality systems and
// polyhedra. Rationals are always rendered as "p/q" strings.

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "ghzact/channels.hpp"
#include "ghzact/linear_system.hpp"
#include "ghzact/polylp.hpp"

namespace ghzact {

using Json = nlohmann::ordered_json;

/// Malformed input file or document.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json rational_json(const Rational& q);
Json vector_json(std::span<const Rational> v);
Rational rational_from_json(const Json& j);

/// {"rows": n, "cols": m, "entries": [["p/q", …], …]}
Json matrix_to_json(const RMatrix& m);
RMatrix matrix_from_json(const Json& j);

/// Emits {"input_dims", "output_dims", "terms": [{"weight", "factors"}]}.
/// Also accepts the compact {"n": N, "terms": [[matrix, …], …]} with unit
/// weights, dimensions read off the factors.
Json map_to_json(const SeparableMap& map);
SeparableMap map_from_json(const Json& j);

/// {"variables": […], "rows": [{"tag", "label", "constant", "coefficients"}]}
Json system_to_json(const LinearSystem& system);
LinearSystem system_from_json(const Json& j);

/// {"vertices": […], "rays": […], "lineality": […]}
Json polyhedron_to_json(const Polyhedron& poly);

Json read_json_file(const std::string& path);
std::string read_text_file(const std::string& path);

/// JSON system if the text parses as JSON, otherwise the H-form text format.
LinearSystem read_system_file(const std::string& path);

}  // namespace ghzact
