#pragma once

#include "totpos/automorph.hpp"
#include "totpos/classify.hpp"
#include "totpos/factor.hpp"
#include "totpos/structure.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace totpos::io {

using nlohmann::json;

/// Rationals are written as "p/q" (or "p"); integers and strings are accepted.
json to_json(const Rat& value);
Rat rat_from_json(const json& j);

/// {"rows": r, "cols": c, "entries": [[...], ...]}. Input entries may be nested
/// row arrays or one flat row-major array.
json to_json(const RatMatrix& m);
RatMatrix matrix_from_json(const json& j);

/// Rows separated by newlines, entries by commas; blank lines and '#' comments skipped.
RatMatrix matrix_from_csv(std::string_view text);

json to_json(const MinorIndex& idx);
json to_json(const Certificate& c);
Certificate certificate_from_json(const json& j);

/// {"n": n, "w": [{"j","k","value"}...], "w_prime": [{"j","k","value"}...], "d": [...]}
/// where w_prime entries carry k+1 in "k", matching the subscript w'_{j,k+1}.
json to_json(const BidiagonalFactorization& f);
BidiagonalFactorization factorization_from_json(const json& j);

json to_json(const CentralizerShape& s);
CentralizerShape shape_from_json(const json& j);

json to_json(const AutomorphismSpec& s);
AutomorphismSpec spec_from_json(const json& j);

/// {"factors": [{"prime": "2", "exponent": "1/2"}, ...]}
json to_json(const RadicalScalar& s);
RadicalScalar radical_from_json(const json& j);

/// {"scale": <radical>, "body": <matrix>, "value": <matrix>?}; "value" present when
/// the product is rational.
json to_json(const ScaledMatrix& m);
ScaledMatrix scaled_from_json(const json& j);

json to_json(const Generator& g);
Generator generator_from_json(const json& j);

json to_json(const GeneratorImageTable& t);
GeneratorImageTable table_from_json(const json& j);

json to_json(const Counterexample& c);

/// Whole-file helpers. Throw std::invalid_argument with the file name on I/O errors;
/// JSON syntax errors surface as nlohmann::json::parse_error (byte position included).
std::string read_file(const std::string& path);
json read_json_file(const std::string& path);

}  // namespace totpos::io
