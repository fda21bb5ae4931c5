#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "lific/conditions.hpp"
#include "lific/lification.hpp"
#include "lific/verification.hpp"

namespace lific {

using Json = nlohmann::json;

// {"rows","cols","grade","field","coeffs":[grade+1][rows][cols]} with entries as scalar text.
Json poly_to_json(const MatrixPolynomial& p);
MatrixPolynomial poly_from_json(const Json& j);

// Adds "block_size", "star", "provenance" (per block label) and "registers"
// (per power, block row and block column: list of {"word":[...], "coef":"p/q"}).
Json block_to_json(const BlockPolynomial& b);
// Accepts plain polynomial JSON (block size 1, no registers) as well.
BlockPolynomial block_from_json(const Json& j);

Json label_to_json(const BlockLabel& lab);
Json form_to_json(const Form& f);
Form form_from_json(const Json& j);

Json report_to_json(const VerificationReport& r);
Json sparsity_to_json(const SparsityReport& r);
Json lification_to_json(const LificationResult& r);

// Reads and parses a file; ParseError carries the path and parser position.
Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j, bool pretty = true);
std::string read_text_file(const std::string& path);

}  // namespace lific
