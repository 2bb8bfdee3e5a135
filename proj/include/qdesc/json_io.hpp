#pragma once

#include <string>

#include "json.hpp"
#include "qdesc/descent.hpp"
#include "qdesc/error.hpp"
#include "qdesc/quartic.hpp"

namespace qdesc {

using nlohmann::json;

// Malformed input raises Error("parse", ...); the CLI maps that code to exit status 2.
json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

// {"coeffs": [15 decimal strings], "ring": "ZZ"}
MPoly<BigInt> curve_from_json(const json& j);
json curve_to_json(const MPoly<BigInt>& g);
MPoly<BigInt> read_curve_file(const std::string& path);

// {"degree": n, "generators": [[images]...], "order": "..."}; the order is recomputed and
// must agree when present.
PermGroup group_from_json(const json& j);
json group_to_json(const PermGroup& g);
PermGroup read_group_file(const std::string& path);

json bigint_json(const BigInt& a);
json fq_to_json(const FqElem& a);  // {"p", "r", "coeffs"}, coefficients low degree first
json field_to_json(const FqField& F);
json bitangents_to_json(const BitangentSet& b);
json lpoly_to_json(const LPolynomial& l);
json flags_to_json(const ReductionFlags& f);
json fixed_row_to_json(const FixedRow& r);
json table_to_json(const DescentTable& t);
json error_to_json(const Error& e);

}  // namespace qdesc
