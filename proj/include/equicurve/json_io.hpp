#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "equicurve/deformation.hpp"
#include "equicurve/ramification.hpp"

namespace equicurve {

using nlohmann::json;

// A curve with the generators of its group. The hyperelliptic involution is added unless
// "involution": false.
struct CurveInput {
  HyperellipticModel model;
  std::vector<CurveAutomorphism> generators;
};

// All parsers throw Error(Parse) on malformed input.
json read_json_file(const std::string& path);
json parse_json_text(const std::string& text);

// {"p", "k", "model": "odd"|"char2", "f": [...], "h": [...], "automorphisms": [{alpha, beta, lambda, c}], "involution"}
// Coefficients are integers mod p for prime fields and element encodings in [0, q) otherwise.
CurveInput parse_curve(const json& j);
json curve_to_json(const CurveInput& c);

// {"n", "gY", "p"?, "branch": [{"e", "filtration"} | {"e", "tame": true}]}
RamificationProfile parse_profile(const json& j);
json profile_to_json(const RamificationProfile& profile);

// {"branch_coeffs": [...], "free_orbits": [{"nQ", "count"}]}
InvariantDivisorSpec parse_divisor_spec(const json& j);
json divisor_spec_to_json(const InvariantDivisorSpec& spec);

// [{"place": id, "coeff": n}] with place ids of the base curve, or the aliases "Dinf", "R", "K"
// (fibre over infinity, ramification divisor, canonical divisor of the cover), each times coeff.
// The result lives on cover.model.
Divisor parse_divisor(const json& j, const ConcreteCover& cover);
json divisor_to_json(const Divisor& d);

// {"p", "k", "dim", "generators": [[[...], ...], ...], "order"?}
GroupRepresentation parse_representation(const json& j);
// {"N", "cyclicQuotient"}
GroupShape parse_group_shape(const json& j);

json matrix_to_json(const Matrix& m);

}  // namespace equicurve
