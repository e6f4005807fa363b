#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "hklat/cones.hpp"
#include "hklat/ideal.hpp"
#include "hklat/navigator.hpp"

// JSON wire formats. Rationals travel as strings "p" or "p/q"; readers also
// accept JSON integers. Lattice descriptors:
//   { "label": string, "rank": int, "gram": [[rational]] }
// Polynomials:
//   { "degree": int, "terms": [{ "exps": [int], "coef": rational }] }
// QuadExt values: { "a": rational, "b": rational, "d": int }.
namespace hklat::io {

using nlohmann::json;

Rational rational_from_json(const json& j);
json to_json(const Rational& r);

VectorQ vector_from_json(const json& j);
json to_json(const VectorQ& v);

json to_json(const QuadExt& x);
QuadExt quad_ext_from_json(const json& j);
json to_json(const Vector<QuadExt>& v);

Lattice lattice_from_json(const json& j);
json to_json(const Lattice& lat);

PolynomialQ polynomial_from_json(const json& j);
json to_json(const PolynomialQ& p);

/// Lattice descriptor fields plus "deformation_type", "n", "ample" and an
/// optional "walls" list.
VarietyDescriptor descriptor_from_json(const json& j);
json to_json(const VarietyDescriptor& desc);

Certificate certificate_from_json(const json& j);
json to_json(const Certificate& cert);

json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

}  // namespace hklat::io
