#pragma once

#include <json.hpp>

#include "leibniz/bimodule.hpp"

namespace leibniz::io {

using nlohmann::json;

/// Algebra documents: {"field": "Q" | {"p": 5}, "dim": n,
///   "products": [[i, j, [c_1, ..., c_n]], ...]} with 1-based indices.
/// Scalars are strings over Q ("3", "-1/2") and integers over GF(p);
/// omitted pairs multiply to zero. Parsing does not validate the algebra.
LeibnizAlgebra parse_algebra(const json& doc);
json serialize_algebra(const LeibnizAlgebra& a);

/// Bimodule documents: {"dim": m, "lambda": [matrix per basis element],
///   "rho": [...]} with matrices as row lists.
Bimodule parse_bimodule(const json& doc, std::shared_ptr<const LeibnizAlgebra> algebra);
json serialize_bimodule(const Bimodule& m);

LeibnizAlgebra load_algebra_file(const std::string& path);
Bimodule load_bimodule_file(const std::string& path, std::shared_ptr<const LeibnizAlgebra> algebra);

/// Built-in fixtures, keyed by the CLI names:
///   "one-dim", "A-alg" - the one-dimensional Lie algebra
///   "N"                - basis (e, f) with f f = e
///   "D"                - basis (h, e) with h e = e
///   "B"                - abelian two-dimensional algebra
std::vector<std::string> builtin_algebra_names();
LeibnizAlgebra builtin_algebra(const std::string& name, const FieldSpec& f);

/// Built-in coefficient choices for an algebra: "trivial", "adjoint",
/// "A-mod" (the 3-dim module over the one-dimensional Lie algebra), or
/// "B" (the symmetrized 2-dim module over the abelian pair algebra).
Bimodule builtin_coefficients(const std::string& name, std::shared_ptr<const LeibnizAlgebra> a);

/// One machine-readable check record for reports.
json report_record(const std::string& anchor, const std::string& check, const json& expected,
                   const json& computed, bool pass);

}  // namespace leibniz::io
