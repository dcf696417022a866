#pragma once

#include "lics/acs.hpp"
#include "lics/catalog.hpp"
#include "lics/lie_algebra.hpp"
#include "lics/moduli.hpp"
#include "lics/path.hpp"
#include "lics/plucker.hpp"
#include "lics/subspace.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace lics::io {

using json = nlohmann::json;

/// Parses text as JSON; syntax errors become Errc::Parse.
json parse_json(std::string_view text);
std::string read_file(const std::string& path);

json to_json(const GaussScalar& z);
GaussScalar scalar_from_json(const json& j);

json to_json(const Vector& v);
json to_json(const Matrix& m);
Matrix matrix_from_json(const json& j, std::size_t cols);

/// {"ambient_dim": n, "basis": [[gauss-string, ...], ...]}. Input rows may be
/// any spanning set; the result is canonical.
json to_json(const Subspace& s);
Subspace subspace_from_json(const json& j);

/// {"dim": d, "basis": [names], "brackets": [{"i": 1, "j": 2, "c": {"3": "1"}}]}, 1-based, i < j.
json to_json(const LieAlgebra& g);
LieAlgebra algebra_from_json(const json& j, JacobiCheck check = JacobiCheck::Strict);

json to_json(const PluckerVector& p);
json to_json(const CRDecomposition& d);

/// Classification report: in_V, k, kind, J, leaf_tangent, cr_bundle, plucker.
json classification_report(const LieAlgebra& g, const Subspace& t);

json to_json(const PathReport& r);

/// FNV-1a 64-bit, as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view bytes);

}  // namespace lics::io
