#pragma once

#include <optional>
#include <string>

#include "cartan/classifier.hpp"
#include "json.hpp"

namespace cartan {

using Json = nlohmann::ordered_json;

/// Matrices are arrays of rows of rational strings "p/q" (or "p"), always
/// canonical.
Json to_json(const Mat& m);
Json to_json(const Vec& v);
Json to_json(const Params& p);
Json to_json(const MatrixLieAlgebra& a);
Json to_json(const GradedAlgebra& g);
Json to_json(const SymmetricPair& p);
Json to_json(const Extension& e);
Json to_json(const ValidationReport& r);
Json to_json(const ExistenceVerdict& v, bool include_witness);

/// Parsers throw InputError for malformed documents; algebra construction
/// can raise InvariantError ("not closed under bracket", ...).
Mat mat_from_json(const Json& j);
Vec vec_from_json(const Json& j);
Params params_from_json(const Json& j);
MatrixLieAlgebra algebra_from_json(const Json& j);
GradedAlgebra graded_from_json(const Json& j);
SymmetricPair pair_from_json(const Json& j);
Extension extension_from_json(const Json& j);

/// Canonical text: two-space indent, trailing newline.
std::string dump(const Json& j);
Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// Curvature and axiom report for an extension, the shape printed by check-extension.
Json extension_report(const Extension& e);

}  // namespace cartan
