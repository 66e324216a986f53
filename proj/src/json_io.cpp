#include "equicurve/json_io.hpp"

#include <fstream>
#include <sstream>

#include "equicurve/errors.hpp"

namespace equicurve {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::Parse, what); }

const json& member(const json& j, const char* key) {
  if (!j.is_object()) bad("expected an object");
  const auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing \"") + key + "\"");
  return *it;
}

std::int64_t as_int(const json& j, const std::string& what) {
  if (!j.is_number_integer()) bad(what + " must be an integer");
  return j.get<std::int64_t>();
}

int int_member(const json& j, const char* key) { return static_cast<int>(as_int(member(j, key), key)); }

Fq parse_element(const GaloisField& F, const json& j) {
  const std::int64_t v = as_int(j, "field element");
  if (F.k() == 1) return F.from_int(v);
  if (v < 0 || static_cast<std::uint64_t>(v) >= F.q()) bad("element encoding " + std::to_string(v) + " out of range");
  return F.element(static_cast<std::uint64_t>(v));
}

Poly parse_poly(const GaloisField& F, const json& j) {
  if (!j.is_array()) bad("polynomial must be a coefficient array");
  Vec c;
  for (const auto& e : j) c.push_back(parse_element(F, e));
  return Poly(F, c);
}

json element_json(Fq a) { return a.value(); }

}  // namespace

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str());
}

CurveInput parse_curve(const json& j) {
  try {
    const int p = int_member(j, "p");
    const int k = j.contains("k") ? int_member(j, "k") : 1;
    if (p < 2 || k < 1) bad("p and k must be positive");
    const GaloisField& F = field_make(static_cast<std::uint64_t>(p), static_cast<std::uint64_t>(k));
    const json& kind = member(j, "model");
    if (!kind.is_string()) bad("\"model\" must be a string");
    const std::string model_kind = kind.get<std::string>();
    const Poly f = parse_poly(F, member(j, "f"));
    Poly h(F);
    if (model_kind == "odd") {
      if (p == 2) throw Error(ErrorCode::WrongCharacteristic, "odd model over a field of characteristic 2");
      if (j.contains("h") && !parse_poly(F, j["h"]).is_zero()) bad("odd model takes no h");
    } else if (model_kind == "char2") {
      if (p != 2) throw Error(ErrorCode::WrongCharacteristic, "char2 model needs p = 2");
      h = parse_poly(F, member(j, "h"));
    } else {
      bad("\"model\" must be \"odd\" or \"char2\"");
    }
    CurveInput out{HyperellipticModel(h, f), {}};
    curve_validate(out.model);
    if (j.contains("automorphisms")) {
      const json& list = j["automorphisms"];
      if (!list.is_array()) bad("\"automorphisms\" must be an array");
      for (const auto& a : list) {
        Poly c(F);
        if (a.contains("c")) c = parse_poly(F, a["c"]);
        CurveAutomorphism phi(parse_element(F, member(a, "alpha")), parse_element(F, member(a, "beta")),
                              parse_element(F, member(a, "lambda")), c);
        check_automorphism(out.model, phi);
        out.generators.push_back(phi);
      }
    }
    bool involution = true;
    if (j.contains("involution")) {
      if (!j["involution"].is_boolean()) bad("\"involution\" must be a boolean");
      involution = j["involution"].get<bool>();
    }
    if (involution) out.generators.push_back(CurveAutomorphism::hyperelliptic_involution(out.model));
    return out;
  } catch (const json::exception& e) {
    bad(e.what());
  }
}

json curve_to_json(const CurveInput& c) {
  const auto& F = c.model.field();
  json j{{"p", F.p()}, {"k", F.k()}, {"model", c.model.char2() ? "char2" : "odd"}, {"f", c.model.f().encodings()}};
  if (c.model.char2()) j["h"] = c.model.h().encodings();
  json autos = json::array();
  for (const auto& g : c.generators) {
    autos.push_back({{"alpha", element_json(g.alpha())},
                     {"beta", element_json(g.beta())},
                     {"lambda", element_json(g.lambda())},
                     {"c", g.c().encodings()}});
  }
  j["automorphisms"] = autos;
  j["involution"] = false;
  return j;
}

RamificationProfile parse_profile(const json& j) {
  try {
    RamificationProfile p;
    p.n = int_member(j, "n");
    p.gY = int_member(j, "gY");
    if (j.contains("p") && !j["p"].is_null()) p.p = int_member(j, "p");
    const json& branch = member(j, "branch");
    if (!branch.is_array()) bad("\"branch\" must be an array");
    for (const auto& b : branch) {
      const int e = int_member(b, "e");
      if (b.contains("filtration")) {
        BranchPoint bp;
        bp.e = e;
        for (const auto& o : b["filtration"]) bp.filtration.push_back(static_cast<int>(as_int(o, "filtration order")));
        p.branch.push_back(bp);
      } else if (b.value("tame", false)) {
        p.branch.push_back(BranchPoint::tame(e));
      } else {
        bad("branch point needs \"filtration\" or \"tame\": true");
      }
    }
    return p;
  } catch (const json::exception& e) {
    bad(e.what());
  }
}

json profile_to_json(const RamificationProfile& profile) {
  json branch = json::array();
  for (const auto& b : profile.branch) branch.push_back({{"e", b.e}, {"filtration", b.filtration}});
  json j{{"n", profile.n}, {"gY", profile.gY}, {"branch", branch}};
  if (profile.p) j["p"] = *profile.p;
  return j;
}

InvariantDivisorSpec parse_divisor_spec(const json& j) {
  try {
    InvariantDivisorSpec s;
    const json& bc = member(j, "branch_coeffs");
    if (!bc.is_array()) bad("\"branch_coeffs\" must be an array");
    for (const auto& c : bc) s.branch_coeffs.push_back(static_cast<int>(as_int(c, "branch coefficient")));
    if (j.contains("free_orbits")) {
      for (const auto& o : j["free_orbits"]) s.free_orbits.emplace_back(int_member(o, "nQ"), int_member(o, "count"));
    }
    return s;
  } catch (const json::exception& e) {
    bad(e.what());
  }
}

json divisor_spec_to_json(const InvariantDivisorSpec& spec) {
  json orbits = json::array();
  for (const auto& [nq, count] : spec.free_orbits) orbits.push_back({{"nQ", nq}, {"count", count}});
  return json{{"branch_coeffs", spec.branch_coeffs}, {"free_orbits", orbits}};
}

Divisor parse_divisor(const json& j, const ConcreteCover& cover) {
  if (!j.is_array()) bad("divisor must be an array of {\"place\", \"coeff\"}");
  Divisor base;
  Divisor extra;
  try {
    for (const auto& e : j) {
      const json& place = member(e, "place");
      if (!place.is_string()) bad("\"place\" must be a string");
      const std::string id = place.get<std::string>();
      const int n = int_member(e, "coeff");
      if (id == "Dinf") {
        extra += n * infinity_divisor(cover.model);
      } else if (id == "R") {
        extra += n * ramification_divisor(cover);
      } else if (id == "K") {
        extra += n * canonical_divisor(cover);
      } else {
        base.add(place_from_id(cover.base, id), n);
      }
    }
  } catch (const json::exception& ex) {
    bad(ex.what());
  }
  return cover.lift(base) + extra;
}

json divisor_to_json(const Divisor& d) {
  json out = json::array();
  for (const auto& [p, n] : d.entries()) out.push_back({{"place", p.id()}, {"coeff", n}});
  return out;
}

GroupRepresentation parse_representation(const json& j) {
  try {
    const int p = int_member(j, "p");
    const int k = j.contains("k") ? int_member(j, "k") : 1;
    const GaloisField& F = field_make(static_cast<std::uint64_t>(p), static_cast<std::uint64_t>(k));
    const int dim = int_member(j, "dim");
    std::vector<Matrix> gens;
    for (const auto& g : member(j, "generators")) {
      if (!g.is_array() || static_cast<int>(g.size()) != dim) bad("generator must have dim rows");
      Matrix m(F, dim, dim);
      for (int r = 0; r < dim; ++r) {
        const json& row = g[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<int>(row.size()) != dim) bad("generator must have dim columns");
        for (int c = 0; c < dim; ++c) m(r, c) = parse_element(F, row[static_cast<std::size_t>(c)]);
      }
      gens.push_back(m);
    }
    std::optional<int> order;
    if (j.contains("order")) order = int_member(j, "order");
    return make_representation(F, dim, std::move(gens), order);
  } catch (const json::exception& e) {
    bad(e.what());
  }
}

GroupShape parse_group_shape(const json& j) {
  GroupShape s;
  s.normal_order = int_member(j, "N");
  s.cyclic_quotient = int_member(j, "cyclicQuotient");
  if (s.normal_order < 1 || s.cyclic_quotient < 1) bad("group shape orders must be positive");
  return s;
}

json matrix_to_json(const Matrix& m) { return m.encodings(); }

}  // namespace equicurve
