#include <cstdlib>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "equicurve/check.hpp"
#include "equicurve/criteria.hpp"
#include "equicurve/deformation.hpp"
#include "equicurve/differentials.hpp"
#include "equicurve/errors.hpp"
#include "equicurve/goppa.hpp"
#include "equicurve/json_io.hpp"

using namespace equicurve;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 2;
constexpr int kExitUsage = 64;
constexpr int kExitHypothesis = 65;

struct Args {
  std::string curve;
  std::string profile;
  std::string divisor;
  std::string points = "auto";
  std::string group_shape;
  std::vector<std::string> reps;
  int m = 0;
  int ext = 0;
  int samples = 24;
  int max_m = 5;
  bool force = false;
  bool hyperelliptic = false;
  bool distance = false;
  bool alist = false;
  std::uint64_t seed = 1;
  std::uint64_t bound = kDefaultDistanceBound;
};

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int exit_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::Parse:
    case ErrorCode::NotPrime:
    case ErrorCode::WrongCharacteristic:
    case ErrorCode::InvalidAutomorphism:
    case ErrorCode::NotAGroup:
    case ErrorCode::NotFaithful:
    case ErrorCode::BadFiltration:
    case ErrorCode::SupportOverlap:
      return kExitUsage;
    case ErrorCode::Internal:
      return kExitMismatch;
    default:
      return kExitHypothesis;
  }
}

void emit(json j) {
  j["schema"] = 1;
  std::cout << j.dump(2) << "\n";
}

CurveInput load_curve(const Args& a) { return parse_curve(read_json_file(a.curve)); }

ConcreteCover cover_of(const CurveInput& c) {
  return profile_from_curve(c.model, generate_group(c.model, c.generators));
}

std::vector<CurveAutomorphism> lifted(const ConcreteCover& cover, const std::vector<CurveAutomorphism>& gens) {
  std::vector<CurveAutomorphism> out;
  for (const auto& g : gens) out.push_back(g.map(cover.embedding()));
  return out;
}

void need_target(const Args& a) {
  if (a.m > 0 && !a.divisor.empty()) throw Usage("give only one of --m and --divisor");
  // a profile may carry its own divisor
  if (a.m == 0 && a.divisor.empty() && a.profile.empty()) throw Usage("give one of --m and --divisor");
}

void need_source(const Args& a) {
  if (a.curve.empty() == a.profile.empty()) throw Usage("give exactly one of --curve and --profile");
}

InvariantDivisorSpec profile_divisor(const Args& a, const json& profile_json) {
  if (!a.divisor.empty()) return parse_divisor_spec(read_json_file(a.divisor));
  if (profile_json.contains("divisor")) return parse_divisor_spec(profile_json["divisor"]);
  throw Usage("no divisor: pass --divisor or put \"divisor\" in the profile");
}

int polydiff_total(int g, int m) { return m == 1 ? g : (2 * m - 1) * (g - 1); }

std::vector<Verdict> divisor_verdicts(const RamificationProfile& profile, const InvariantDivisorSpec& spec) {
  const int g = profile_validate(profile);
  const int deg = spec.degree(profile);
  std::vector<Verdict> out;
  if (deg > 2 * g - 2) out.push_back(trivial_action_iff(profile, spec));
  if (profile.n >= 2 && g >= 1 && deg >= 2 * g) out.push_back(trivial_deg_ge_2g(profile, spec));
  if (profile.n >= 2 && g >= 2 && deg == 2 * g - 1) out.push_back(trivial_deg_2gm1(profile, spec));
  out.push_back(faithful_sufficient(profile, spec));
  return out;
}

const Verdict& primary(const std::vector<Verdict>& vs) {
  for (const auto& v : vs) {
    if (v.result == VerdictResult::Faithful) return v;
  }
  for (const auto& v : vs) {
    if (v.result == VerdictResult::Trivial) return v;
  }
  return vs.front();
}

json verdicts_json(const std::vector<Verdict>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(v.to_json());
  return out;
}

int cmd_dims(const Args& a) {
  need_source(a);
  need_target(a);
  json out;
  bool ok = true;
  if (!a.profile.empty()) {
    const json pj = read_json_file(a.profile);
    const RamificationProfile profile = parse_profile(pj);
    const int g = profile_validate(profile);
    out["gX"] = g;
    if (a.m > 0) {
      out["m"] = a.m;
      out["total"] = polydiff_total(g, a.m);
      out["invariant"] = invariant_dim_polydiff(profile, a.m);
    } else {
      const InvariantDivisorSpec spec = profile_divisor(a, pj);
      const int deg = spec.degree(profile);
      out["degD"] = deg;
      if (deg > 2 * g - 2) out["total"] = deg + 1 - g;
      try {
        out["invariant"] = invariant_dim_formula(profile, spec);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::DegreeTooSmall || !a.force) throw;
        const auto v = invariant_dim_formula_value(profile, spec);
        out["invariant"] = std::to_string(v.numerator()) + (v.denominator() == 1 ? "" : "/" + std::to_string(v.denominator()));
        out["label"] = "outside hypothesis";
      }
    }
    emit(out);
    return kExitOk;
  }
  const CurveInput curve = load_curve(a);
  const ConcreteCover cover = cover_of(curve);
  const int g = curve.model.genus();
  out["gX"] = g;
  out["profile"] = profile_to_json(cover.profile);
  if (a.m > 0) {
    const ActionOnSpace act = action_on_polydiff(curve.model, curve.generators, a.m);
    const int formula = invariant_dim_polydiff(cover.profile, a.m);
    const int inv = invariant_dim_concrete(act);
    out["m"] = a.m;
    out["total"] = act.dim;
    out["invariant"] = formula;
    out["oracle"] = {{"invariant_action", inv}};
    ok = act.dim == polydiff_total(g, a.m) && inv == formula;
    if (cover.profile.gY == 0) {
      const MKXReport mk = crosscheck_mKX(curve.model, generate_group(curve.model, curve.generators), a.m);
      out["oracle"]["rr_mKX"] = mk.rr_dim;
      out["oracle"]["invariant_rr_mKX"] = mk.invariant_rr;
      ok = ok && mk.ok();
    }
  } else {
    const Divisor d = parse_divisor(read_json_file(a.divisor), cover);
    const RRBasis rr = rr_basis(cover.model, d, std::max(rr_degree_cap(cover.model), d.degree()));
    const int inv = invariant_dim_concrete(action_on_rr(cover.model, cover.group, rr));
    const int deg = d.degree();
    out["degD"] = deg;
    out["total"] = rr.dim();
    out["oracle"] = {{"invariant_concrete", inv}};
    if (deg > 2 * g - 2) ok = rr.dim() == deg + 1 - g;
    const InvariantDivisorSpec spec = invariant_spec(cover, d);
    try {
      const int formula = invariant_dim_formula(cover.profile, spec);
      out["invariant"] = formula;
      ok = ok && formula == inv;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DegreeTooSmall || !a.force) throw;
      const auto v = invariant_dim_formula_value(cover.profile, spec);
      out["invariant"] = std::to_string(v.numerator()) + (v.denominator() == 1 ? "" : "/" + std::to_string(v.denominator()));
      out["label"] = "outside hypothesis";
    }
  }
  out["ok"] = ok;
  emit(out);
  return ok ? kExitOk : kExitMismatch;
}

int cmd_faithful(const Args& a) {
  need_source(a);
  need_target(a);
  if (!a.profile.empty()) {
    const json pj = read_json_file(a.profile);
    const RamificationProfile profile = parse_profile(pj);
    if (a.m > 0) {
      emit(faithful_polydiff(profile, a.m, a.hyperelliptic).to_json());
      return kExitOk;
    }
    const auto vs = divisor_verdicts(profile, profile_divisor(a, pj));
    json out = primary(vs).to_json();
    out["verdicts"] = verdicts_json(vs);
    emit(out);
    return kExitOk;
  }
  const CurveInput curve = load_curve(a);
  const ConcreteCover cover = cover_of(curve);
  const int n = cover.profile.n;
  json out;
  bool consistent = true;
  if (a.m > 0) {
    const Verdict v = faithful_polydiff(cover.profile, a.m, cover.has_hyperelliptic_involution);
    consistent = verdict_matches_action(v, action_on_polydiff(curve.model, curve.generators, a.m), n);
    out = v.to_json();
  } else {
    const Divisor d = parse_divisor(read_json_file(a.divisor), cover);
    const RRBasis rr = rr_basis(cover.model, d, std::max(rr_degree_cap(cover.model), d.degree()));
    const ActionOnSpace act = action_on_rr(cover.model, cover.group, rr);
    const auto vs = divisor_verdicts(cover.profile, invariant_spec(cover, d));
    for (const auto& v : vs) consistent = consistent && verdict_matches_action(v, act, n);
    out = primary(vs).to_json();
    out["verdicts"] = verdicts_json(vs);
  }
  out["matches_matrices"] = consistent;
  emit(out);
  return consistent ? kExitOk : kExitMismatch;
}

int cmd_basis(const Args& a) {
  if (a.curve.empty()) throw Usage("basis needs --curve");
  need_target(a);
  const CurveInput curve = load_curve(a);
  json out;
  json gens = json::array();
  for (const auto& g : curve.generators) gens.push_back(g.to_string());
  out["generators"] = gens;
  json mats = json::array();
  if (a.m > 0) {
    json items = json::array();
    for (const auto& w : basis_polydiff(curve.model, a.m)) {
      items.push_back({{"i", w.i}, {"with_y", w.with_y}, {"m", w.m}});
    }
    out["m"] = a.m;
    out["omega"] = curve.model.char2() ? "dx^m/h(x)^m" : "dx^m/y^m";
    out["basis"] = items;
    for (const auto& mat : action_on_polydiff(curve.model, curve.generators, a.m).generators) {
      mats.push_back(matrix_to_json(mat));
    }
  } else {
    const ConcreteCover cover = cover_of(curve);
    const Divisor d = parse_divisor(read_json_file(a.divisor), cover);
    const RRBasis rr = rr_basis(cover.model, d, std::max(rr_degree_cap(cover.model), d.degree()));
    json items = json::array();
    for (const auto& u : rr.basis) items.push_back(u.to_string());
    out["field"] = cover.model.field().name();
    out["basis"] = items;
    for (const auto& mat : action_on_rr(cover.model, lifted(cover, curve.generators), rr).generators) {
      mats.push_back(matrix_to_json(mat));
    }
  }
  out["action"] = mats;
  emit(out);
  return kExitOk;
}

int cmd_rr(const Args& a) {
  if (a.curve.empty() || a.divisor.empty()) throw Usage("rr needs --curve and --divisor");
  const CurveInput curve = load_curve(a);
  const ConcreteCover cover = cover_of(curve);
  const Divisor d = parse_divisor(read_json_file(a.divisor), cover);
  const RRBasis rr = rr_basis(cover.model, d, std::max(rr_degree_cap(cover.model), d.degree()));
  json items = json::array();
  for (const auto& u : rr.basis) items.push_back(u.to_string());
  json out{{"field", cover.model.field().name()},
           {"divisor", divisor_to_json(d)},
           {"deg", d.degree()},
           {"dim", rr.dim()},
           {"den", rr.den.to_string()},
           {"degree_bound", rr.degree_bound},
           {"basis", items}};
  emit(out);
  return kExitOk;
}

struct GoppaSetup {
  ConcreteCover cover;
  Divisor divisor;
  std::vector<CurveAutomorphism> generators;
  int ext;
};

GoppaSetup goppa_setup(const CurveInput& curve, const json& divisor_json, int ext) {
  const HyperellipticModel w = curve.model.base_change(ext);
  const FieldEmbedding emb(curve.model.field(), w.field());
  std::vector<CurveAutomorphism> gens;
  for (const auto& g : curve.generators) gens.push_back(g.map(emb));
  ConcreteCover cover = profile_from_curve(w, generate_group(w, gens));
  Divisor d = parse_divisor(divisor_json, cover);
  return GoppaSetup{cover, d, lifted(cover, gens), ext};
}

int cmd_goppa(const Args& a) {
  if (a.curve.empty() || a.divisor.empty()) throw Usage("goppa needs --curve and --divisor");
  const CurveInput curve = load_curve(a);
  const json dj = read_json_file(a.divisor);
  const bool automatic = a.points == "auto";
  std::optional<GoppaSetup> setup;
  if (a.ext > 0) {
    setup = goppa_setup(curve, dj, a.ext);
  } else if (!automatic) {
    setup = goppa_setup(curve, dj, 1);
  } else {
    for (int e = 1; e <= 6 && !setup; ++e) {
      GoppaSetup s = goppa_setup(curve, dj, e);
      if (static_cast<int>(evaluation_points(s.cover.model, s.divisor).size()) > s.divisor.degree()) setup = s;
    }
    if (!setup) throw Error(ErrorCode::BoundExceeded, "no extension up to degree 6 has more than deg D points");
  }
  const HyperellipticModel& model = setup->cover.model;
  std::vector<Place> points;
  if (automatic) {
    points = evaluation_points(model, setup->divisor);
  } else {
    const json pj = read_json_file(a.points);
    if (!pj.is_array()) throw Error(ErrorCode::Parse, "points file must be an array of place ids");
    for (const auto& id : pj) {
      if (!id.is_string()) throw Error(ErrorCode::Parse, "place ids must be strings");
      points.push_back(place_from_id(model, id.get<std::string>()));
    }
  }
  GoppaCode code = goppa_build(model, setup->divisor, points);
  if (a.distance) code.d = min_distance_bruteforce(code, a.bound);
  if (a.alist) {
    std::cout << code_to_alist(code);
    return kExitOk;
  }
  json out = code_to_json(code);
  out["ext"] = setup->ext;
  out["divisor"] = divisor_to_json(code.divisor);
  bool ok = true;
  if (code.d && code.length() > code.divisor.degree()) {
    out["goppa_bound"] = code.length() - code.divisor.degree();
    ok = *code.d >= code.length() - code.divisor.degree();
  }
  const PermutationAction act = code_action(code, setup->generators);
  out["action"] = {{"permutations", act.permutations},
                   {"stable", act.stable},
                   {"trivial_on_code", act.trivial_on_code},
                   {"group_order", act.group_order},
                   {"rr_faithful", act.rr_faithful},
                   {"certificate", act.certificate.to_json()}};
  ok = ok && act.stable;
  if (act.certificate.result == VerdictResult::Faithful) ok = ok && act.rr_faithful;
  out["ok"] = ok;
  emit(out);
  return ok ? kExitOk : kExitMismatch;
}

int cmd_deform(const Args& a) {
  std::optional<GroupShape> shape;
  if (!a.group_shape.empty()) shape = parse_group_shape(parse_json_text(a.group_shape));
  std::vector<GroupRepresentation> reps;
  for (const auto& path : a.reps) reps.push_back(parse_representation(read_json_file(path)));
  json out;
  bool ok = true;
  std::optional<int> p;
  if (!a.curve.empty() && !a.profile.empty()) throw Usage("give at most one of --curve and --profile");
  if (!a.profile.empty()) {
    const RamificationProfile profile = parse_profile(read_json_file(a.profile));
    const DeformationDim dd = deformation_dim(profile);
    out["dim"] = dd.dim;
    out["crosscheck"] = dd.crosscheck;
    ok = dd.dim == dd.crosscheck;
    p = profile.p;
    if (!shape && p && profile.n % *p != 0) shape = GroupShape{profile.n, 1};
  } else if (!a.curve.empty()) {
    const CurveInput curve = load_curve(a);
    const ConcreteCover cover = cover_of(curve);
    const DeformationDim dd = deformation_dim(cover.profile);
    out["dim"] = dd.dim;
    out["crosscheck"] = dd.crosscheck;
    ok = dd.dim == dd.crosscheck;
    p = static_cast<int>(curve.model.field().p());
    if (!shape && cover.profile.n % *p != 0) shape = GroupShape{cover.profile.n, 1};
    for (int m = 1; m <= 3; ++m) {
      const ActionOnSpace act = action_on_polydiff(curve.model, curve.generators, m);
      reps.push_back(GroupRepresentation{&curve.model.field(), act.dim, act.generators, cover.profile.n});
    }
  } else if (reps.empty()) {
    throw Usage("deform needs --profile, --curve or --rep");
  }
  if (!p && !reps.empty()) p = static_cast<int>(reps.front().field->p());
  for (const auto& rep : reps) {
    if (p && static_cast<int>(rep.field->p()) != *p)
      throw Error(ErrorCode::WrongCharacteristic, "representation over characteristic " +
                                                      std::to_string(rep.field->p()) + ", expected " + std::to_string(*p));
  }
  if (!p && shape) throw Usage("the characteristic is unknown; add \"p\" to the profile");
  const HypothesisReport hyp = check_groups_hypothesis(reps, shape, p.value_or(0));
  out["hypothesis"] = hyp.status();
  json samples = json::array();
  bool duality = true;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const bool dual = check_duality(reps[i]);
    duality = duality && dual;
    samples.push_back({{"invariants", hyp.samples[i].first}, {"coinvariants", hyp.samples[i].second}, {"duality", dual}});
  }
  out["samples"] = samples;
  ok = ok && duality;
  out["ok"] = ok;
  emit(out);
  if (!ok) return kExitMismatch;
  // the dimension was computed under a hypothesis that a sample refutes
  if (out.contains("dim") && hyp.status() == "fails") return kExitHypothesis;
  return kExitOk;
}

int cmd_check(const Args& a) {
  if (a.curve.empty()) throw Usage("check needs --curve");
  CheckOptions opt;
  opt.seed = a.seed;
  opt.divisor_samples = a.samples;
  opt.max_m = a.max_m;
  const CheckReport rep = run_check(load_curve(a), opt);
  std::cout << rep.report.dump(2) << "\n";
  return rep.ok ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  Args a;
  if (const char* env = std::getenv("EQUICURVE_SEED")) a.seed = std::strtoull(env, nullptr, 10);
  if (const char* env = std::getenv("EQUICURVE_MAX_Q")) {
    const auto q = std::strtoull(env, nullptr, 10);
    if (q > 0) set_field_size_limit(q);
  }

  CLI::App app{"Equivariant Riemann-Roch data for hyperelliptic curves over finite fields"};
  app.require_subcommand(1);
  auto source = [&a](CLI::App* s) {
    s->add_option("--curve", a.curve, "curve JSON");
    s->add_option("--profile", a.profile, "ramification profile JSON");
  };
  auto target = [&a](CLI::App* s) {
    s->add_option("--m", a.m, "order of polydifferentials")->check(CLI::PositiveNumber);
    s->add_option("--divisor", a.divisor, "divisor JSON");
  };

  CLI::App* dims = app.add_subcommand("dims", "total and invariant dimensions");
  source(dims);
  target(dims);
  dims->add_flag("--force", a.force, "evaluate the invariant formula below its degree bound");

  CLI::App* faithful = app.add_subcommand("faithful", "triviality and faithfulness verdicts");
  source(faithful);
  target(faithful);
  faithful->add_flag("--hyperelliptic", a.hyperelliptic, "G contains a hyperelliptic involution (profiles)");

  CLI::App* basis = app.add_subcommand("basis", "explicit bases and action matrices");
  basis->add_option("--curve", a.curve, "curve JSON")->required();
  target(basis);

  CLI::App* rr = app.add_subcommand("rr", "Riemann-Roch space of a divisor");
  rr->add_option("--curve", a.curve, "curve JSON")->required();
  rr->add_option("--divisor", a.divisor, "divisor JSON")->required();

  CLI::App* goppa = app.add_subcommand("goppa", "algebraic-geometry code C(D, E)");
  goppa->add_option("--curve", a.curve, "curve JSON")->required();
  goppa->add_option("--divisor", a.divisor, "divisor JSON")->required();
  goppa->add_option("--points", a.points, "\"auto\" or a JSON file of place ids");
  goppa->add_option("--ext", a.ext, "extension degree of the code field (default: smallest with |E| > deg D)");
  goppa->add_flag("--distance", a.distance, "brute-force minimum distance");
  goppa->add_option("--bound", a.bound, "largest q^k for the distance search");
  goppa->add_flag("--alist", a.alist, "print the generator matrix as text");

  CLI::App* deform = app.add_subcommand("deform", "equivariant deformation dimension");
  source(deform);
  deform->add_option("--group-shape", a.group_shape, "{\"N\": |N|, \"cyclicQuotient\": |G/N|}");
  deform->add_option("--rep", a.reps, "sample representation JSON (repeatable)");

  CLI::App* check = app.add_subcommand("check", "run every cross-validation on a curve");
  check->add_option("--curve", a.curve, "curve JSON")->required();
  check->add_option("--seed", a.seed, "seed for the divisor sweep");
  check->add_option("--samples", a.samples, "number of random invariant divisors");
  check->add_option("--max-m", a.max_m, "largest polydifferential order");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (dims->parsed()) return cmd_dims(a);
    if (faithful->parsed()) return cmd_faithful(a);
    if (basis->parsed()) return cmd_basis(a);
    if (rr->parsed()) return cmd_rr(a);
    if (goppa->parsed()) return cmd_goppa(a);
    if (deform->parsed()) return cmd_deform(a);
    if (check->parsed()) return cmd_check(a);
  } catch (const Usage& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    json err{{"schema", 1}, {"error", std::string(error_name(e.code()))}, {"message", e.what()}};
    std::cerr << err.dump() << "\n";
    return exit_code(e.code());
  }
  return kExitUsage;
}
