#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "equicurve/automorphism.hpp"
#include "equicurve/check.hpp"
#include "equicurve/criteria.hpp"
#include "equicurve/deformation.hpp"
#include "equicurve/differentials.hpp"
#include "equicurve/goppa.hpp"
#include "equicurve/json_io.hpp"
#include "equicurve/rrspace.hpp"
#include "oracles.hpp"

using namespace equicurve;

namespace {

std::ostringstream why;

bool expect(bool cond, const std::string& what) {
  if (!cond) why << what << "; ";
  return cond;
}

CurveAutomorphism sigma_of(const HyperellipticModel& model) { return CurveAutomorphism::hyperelliptic_involution(model); }

ConcreteCover cover_of(const HyperellipticModel& model, std::vector<CurveAutomorphism> gens) {
  return profile_from_curve(model, generate_group(model, gens));
}

std::string data(const std::string& name) { return std::string(EQUICURVE_DATA) + "/" + name; }

Matrix diagonal(const GaloisField& F, const std::vector<int>& d) {
  Matrix m(F, static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) m(static_cast<int>(i), static_cast<int>(i)) = F.from_int(d[i]);
  return m;
}

HyperellipticModel wild_klein_curve() {
  const auto& F4 = field_make(2, 2);
  return HyperellipticModel(Poly::constant(F4.one()), Poly::from_ints(F4, {0, 0, 0, 0, 0, 1}));
}

CurveAutomorphism wild_translation() {
  const auto& F4 = field_make(2, 2);
  return CurveAutomorphism(F4.one(), F4.one(), F4.one(), Poly(F4, {F4.primitive(), F4.one(), F4.one()}));
}

bool genus_bookkeeping() {
  bool ok = true;
  for (const auto& model : {oracle::c1(), oracle::c2()}) {
    ok &= expect(model.genus() == 2, "genus of a corpus curve");
    const ConcreteCover cover = cover_of(model, {sigma_of(model)});
    const int degR = ramification_divisor(cover).degree();
    ok &= expect(degR == 6, "deg R");
    ok &= expect(2 * model.genus() - 2 == cover.profile.n * (2 * cover.profile.gY - 2) + degR, "Hurwitz");
    ok &= expect(profile_validate(cover.profile) == 2, "profile genus");
  }
  for (int r : {3, 5, 7, 9}) ok &= expect(oracle::artin_schreier(r).genus() == (r - 1) / 2, "Artin-Schreier genus");
  return ok;
}

struct Sweep {
  ConcreteCover cover;
  std::vector<Divisor> divisors;
};

std::vector<Sweep> sweeps() {
  std::vector<Sweep> out;
  std::uint64_t seed = 20;
  for (const auto& model : {oracle::c1(), oracle::c2()}) {
    const ConcreteCover cover = cover_of(model, {sigma_of(model)});
    const int g = model.genus();
    out.push_back({cover, random_invariant_divisors(cover, 30, 2 * g - 1, 8 * g, seed++)});
  }
  return out;
}

bool riemann_roch() {
  int count = 0;
  bool ok = true;
  for (const auto& s : sweeps()) {
    const int g = s.cover.model.genus();
    for (const auto& d : s.divisors) {
      const int deg = d.degree();
      if (deg <= 2 * g - 2 || deg > 8 * g) continue;
      ++count;
      const RRBasis rr = rr_basis(s.cover.model, d, std::max(rr_degree_cap(s.cover.model), deg));
      ok &= expect(rr.dim() == deg + 1 - g, "dim L(D) for " + d.to_string());
    }
  }
  ok &= expect(count >= 50, "only " + std::to_string(count) + " divisors");
  return ok;
}

bool invariant_dimensions() {
  bool ok = true;
  bool negative_bound = false;
  for (const auto& s : sweeps()) {
    const ConcreteCover& cover = s.cover;
    const int bound = invariant_degree_bound(cover.profile);
    negative_bound = negative_bound || bound < 0;
    std::vector<Divisor> all = s.divisors;
    // small multiples of the fibre at infinity, down to the degree bound
    for (int k = -3; k <= 3; ++k) {
      Divisor d;
      for (const auto& P : places_at_infinity(cover.model)) d.add(P, k);
      all.push_back(d);
    }
    for (const auto& d : all) {
      if (d.degree() <= bound) continue;
      const RRBasis rr = rr_basis(cover.model, d, std::max(rr_degree_cap(cover.model), d.degree()));
      const int concrete = invariant_dim_concrete(action_on_rr(cover.model, cover.group, rr));
      ok &= expect(concrete == invariant_dim_formula(cover.profile, invariant_spec(cover, d)),
                   "invariant dim for " + d.to_string());
    }
  }
  ok &= expect(negative_bound, "no wild case with a negative bound");
  return ok;
}

bool polydifferentials() {
  bool ok = true;
  const std::vector<HyperellipticModel> models{oracle::c1(),         oracle::split_odd(7),     oracle::split_odd(9),
                                               oracle::split_odd(5), oracle::c2(),             oracle::artin_schreier(7),
                                               oracle::artin_schreier(9), oracle::xy_model(7), oracle::xy_model(9)};
  for (const auto& model : models) {
    const int g = model.genus();
    const DxDivisor dx = dx_divisor(model);
    const ConcreteCover cover = cover_of(model, {sigma_of(model)});
    for (int m = 1; m <= 5; ++m) {
      const auto basis = basis_polydiff(model, m);
      const int expected = m == 1 ? g : (2 * m - 1) * (g - 1);
      ok &= expect(static_cast<int>(basis.size()) == expected, "basis size");
      for (const auto& w : basis) ok &= expect(polydiff_holomorphic(dx, w), "holomorphy");
      const int action = invariant_dim_concrete(action_on_polydiff(model, {sigma_of(model)}, m));
      ok &= expect(action == invariant_dim_polydiff(cover.profile, m),
                   "invariant polydifferentials g=" + std::to_string(g) + " m=" + std::to_string(m));
    }
  }
  const auto c1 = oracle::c1();
  const auto& F7 = c1.field();
  const std::vector<std::pair<HyperellipticModel, std::vector<CurveAutomorphism>>> groups{
      {c1, {CurveAutomorphism::diagonal(F7.from_int(3), F7.zero(), F7.one()), sigma_of(c1)}},
      {wild_klein_curve(), {wild_translation(), sigma_of(wild_klein_curve())}},
  };
  for (const auto& [model, gens] : groups) {
    const ConcreteCover cover = cover_of(model, gens);
    for (int m = 1; m <= 5; ++m) {
      ok &= expect(invariant_dim_concrete(action_on_polydiff(model, gens, m)) == invariant_dim_polydiff(cover.profile, m),
                   "invariant polydifferentials for a larger group");
    }
  }
  ok &= expect(invariant_dim_concrete(action_on_polydiff(c1, {sigma_of(c1)}, 2)) == 3, "C1 m=2");
  const auto c2 = oracle::c2();
  ok &= expect(invariant_dim_concrete(action_on_polydiff(c2, {sigma_of(c2)}, 1)) == 2, "C2 m=1");
  return ok;
}

bool faithfulness_matrix() {
  bool ok = true;
  const auto c1 = oracle::c1();
  const auto& F7 = c1.field();
  const auto neg = CurveAutomorphism::diagonal(F7.from_int(-1), F7.zero(), F7.one());
  const auto rho = CurveAutomorphism::diagonal(F7.from_int(3), F7.zero(), F7.one());
  std::vector<std::pair<HyperellipticModel, std::vector<CurveAutomorphism>>> cases;
  for (const auto& model : {c1, oracle::split_odd(7), oracle::split_odd(9), oracle::c2(), oracle::xy_model(7),
                            oracle::artin_schreier(9)}) {
    cases.push_back({model, {sigma_of(model)}});
  }
  cases.push_back({c1, {neg}});
  cases.push_back({c1, {rho}});
  cases.push_back({c1, {rho, sigma_of(c1)}});
  cases.push_back({c1, {CurveAutomorphism::diagonal(F7.from_int(2), F7.zero(), F7.one())}});
  cases.push_back({wild_klein_curve(), {wild_translation(), sigma_of(wild_klein_curve())}});
  cases.push_back({wild_klein_curve(), {wild_translation()}});
  for (const auto& [model, gens] : cases) {
    const ConcreteCover cover = cover_of(model, gens);
    const int n = cover.profile.n;
    bool sigma_in_group = false;
    for (const auto& h : cover.group) sigma_in_group = sigma_in_group || h == sigma_of(cover.model);
    for (int m = 1; m <= 5; ++m) {
      const Verdict v = faithful_polydiff(cover.profile, m, cover.has_hyperelliptic_involution);
      const bool nonfaithful = sigma_in_group && ((m == 1 && model.char2()) || (m == 2 && model.genus() == 2));
      ok &= expect((v.result != VerdictResult::Faithful) == nonfaithful, "verdict " + v.clause);
      const auto act = action_on_polydiff(model, gens, m);
      ok &= expect((matrix_group_order(act.generators) == static_cast<std::size_t>(n)) == !nonfaithful,
                   "matrix group order");
      ok &= expect(verdict_matches_action(v, act, n), "verdict against matrices");
    }
  }
  return ok;
}

bool triviality_criteria() {
  bool ok = true;
  const auto c1 = oracle::c1();
  const ConcreteCover cover = cover_of(c1, {sigma_of(c1)});
  const Divisor d2 = 2 * infinity_divisor(cover.model);
  const auto spec2 = invariant_spec(cover, d2);
  const Verdict iff = trivial_action_iff(cover.profile, spec2);
  ok &= expect(iff.result == VerdictResult::Trivial && iff.clause == "trivialD", "trivialD on 2Dinf");
  ok &= expect(iff.detail["lhs"] == "4" && iff.detail["rhs"] == "4", "4 = 4");
  const Verdict ge = trivial_deg_ge_2g(cover.profile, spec2);
  ok &= expect(ge.result == VerdictResult::Trivial && ge.clause == "trivialD2", "trivialD2 on 2Dinf");
  const auto a2 = action_on_rr(cover.model, cover.group, rr_basis(cover.model, d2));
  ok &= expect(a2.dim == 3 && a2.generators[0].is_identity(), "identity action on L(2Dinf)");

  const Divisor d3 = 3 * infinity_divisor(cover.model);
  const Verdict suff = faithful_sufficient(cover.profile, invariant_spec(cover, d3));
  ok &= expect(suff.result == VerdictResult::Faithful && suff.clause == "trivialD4(a)", "trivialD4(a) on 3Dinf");
  const auto a3 = action_on_rr(cover.model, {sigma_of(cover.model)}, rr_basis(cover.model, d3));
  ok &= expect(a3.generators[0] == diagonal(cover.model.field(), {1, 1, 1, 1, -1}), "diag(1,1,1,1,-1)");
  return ok;
}

bool goppa() {
  bool ok = true;
  const auto c1 = oracle::c1();
  std::vector<Place> pts;
  for (int a = 1; a <= 6; ++a) pts.push_back(places_over(c1, c1.field().from_int(a)).front());
  const Divisor d2 = 2 * infinity_divisor(c1);
  const GoppaCode code = goppa_build(c1, d2, pts);
  const int dist = min_distance_bruteforce(code);
  ok &= expect(code.length() == 6 && code.k == 3, "[6,3]");
  ok &= expect(dist == 4 && dist >= code.length() - d2.degree(), "d = 4");
  const PermutationAction act = code_action(code, {sigma_of(c1)});
  ok &= expect(act.trivial_on_code, "sigma is the identity on the code");

  const Divisor d3 = 3 * infinity_divisor(c1);
  const GoppaCode big = goppa_auto(c1, d3, suggest_extension(c1, d3));
  ok &= expect(big.model.field().q() == 49, "code over GF(49)");
  ok &= expect(big.length() > d3.degree(), "|E| > deg D");
  const PermutationAction bact = code_action(big, {sigma_of(big.model)});
  ok &= expect(bact.certificate.result == VerdictResult::Faithful, "injectivity certificate");
  ok &= expect(bact.certificate.clause == "evaluation+trivialD4(a)", "certificate clauses");
  ok &= expect(bact.stable && !bact.trivial_on_code && bact.group_order == 2, "faithful on the code");
  return ok;
}

bool deformation() {
  bool ok = true;
  const std::vector<std::pair<std::string, int>> corpus{
      {"profile_C1.json", 3}, {"profile_C2.json", 3}, {"profile_tame_gY1.json", 2}};
  for (const auto& [name, expected] : corpus) {
    const DeformationDim dd = deformation_dim(parse_profile(read_json_file(data(name))));
    ok &= expect(dd.dim == expected && dd.crosscheck == expected, name);
  }
  const auto rep = parse_representation(read_json_file(data("rep_z3xz3.json")));
  ok &= expect(inv_coinv_dims(rep) == std::make_pair(1, 2), "(dim M^G, dim M_G) = (1, 2)");
  ok &= expect(check_duality(rep), "duality");
  return ok;
}

std::pair<int, std::string> run_cli(const std::string& args) {
  std::string out;
  FILE* pipe = popen((std::string(EQUICURVE_CLI) + " " + args + " 2>/dev/null").c_str(), "r");
  if (!pipe) return {-1, out};
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

bool determinism() {
  const auto a = run_cli("check --curve " + data("C1.json"));
  const auto b = run_cli("check --curve " + data("C1.json"));
  bool ok = expect(a.first == 0 && b.first == 0, "check exit status");
  ok &= expect(!a.second.empty() && a.second == b.second, "reports differ");
  return ok;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double limit;
    std::function<bool()> run;
  };
  const std::vector<Criterion> criteria{
      {"genus bookkeeping", 1, genus_bookkeeping},
      {"Riemann-Roch dimensions on random invariant divisors", 30, riemann_roch},
      {"invariant dimensions against the closed formula", 60, invariant_dimensions},
      {"polydifferential bases and invariants", 60, polydifferentials},
      {"faithfulness table", 60, faithfulness_matrix},
      {"triviality criteria on C1", 60, triviality_criteria},
      {"Goppa codes and the injectivity certificate", 120, goppa},
      {"deformation dimension and invariants vs coinvariants", 5, deformation},
      {"deterministic check reports", 60, determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    why.str("");
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = criteria[i].run();
    } catch (const std::exception& e) {
      why << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > criteria[i].limit) {
      ok = false;
      why << "took " << secs << " s, limit " << criteria[i].limit << " s";
    }
    failures += !ok;
    std::printf("%s criterion %zu: %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].name, secs,
                ok ? "" : " -- ", ok ? "" : why.str().c_str());
  }
  return failures == 0 ? 0 : 1;
}
