#include "equicurve/check.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "equicurve/criteria.hpp"
#include "equicurve/deformation.hpp"
#include "equicurve/differentials.hpp"
#include "equicurve/errors.hpp"
#include "equicurve/rrspace.hpp"

namespace equicurve {

std::vector<std::vector<Place>> place_orbits(const ConcreteCover& cover, int max_points) {
  std::vector<Place> seeds;
  for (const auto& [p, idx] : cover.branch_of) seeds.push_back(p);
  for (const auto& p : places_at_infinity(cover.model)) seeds.push_back(p);
  const auto pts = rational_points(cover.model);
  for (int i = 0; i < std::min<int>(max_points, static_cast<int>(pts.size())); ++i) {
    seeds.push_back(pts[static_cast<std::size_t>(i)]);
  }
  std::set<Place> done;
  std::vector<std::vector<Place>> out;
  for (const auto& p : seeds) {
    if (!p.rational() || done.count(p)) continue;
    std::set<Place> orbit;
    for (const auto& g : cover.group) orbit.insert(place_image(cover.model, g, p));
    done.insert(orbit.begin(), orbit.end());
    out.emplace_back(orbit.begin(), orbit.end());
  }
  return out;
}

std::vector<Divisor> random_invariant_divisors(const ConcreteCover& cover, int count, int min_deg, int max_deg,
                                               std::uint64_t seed) {
  const auto orbits = place_orbits(cover);
  const Place inf = places_at_infinity(cover.model).front();
  std::size_t inf_orbit = 0;
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    if (std::find(orbits[i].begin(), orbits[i].end(), inf) != orbits[i].end()) inf_orbit = i;
  }
  const int s = static_cast<int>(orbits[inf_orbit].size());
  std::mt19937_64 rng(seed);
  auto pick = [&rng](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
  std::vector<Divisor> out;
  for (int attempt = 0; static_cast<int>(out.size()) < count && attempt < 100 * count; ++attempt) {
    Divisor d;
    const int terms = pick(1, 3);
    for (int t = 0; t < terms; ++t) {
      const auto& orbit = orbits[static_cast<std::size_t>(pick(0, static_cast<int>(orbits.size()) - 1))];
      const int c = pick(-2, 3);
      for (const auto& p : orbit) d.add(p, c);
    }
    const int target = pick(min_deg, max_deg);
    const int gap = target - d.degree();
    const int c = gap >= 0 ? (gap + s - 1) / s : -((-gap) / s);
    const int deg = d.degree() + c * s;
    if (deg < min_deg || deg > max_deg) continue;
    for (const auto& p : orbits[inf_orbit]) d.add(p, c);
    out.push_back(d);
  }
  return out;
}

namespace {

GroupRepresentation as_representation(const GaloisField& F, const ActionOnSpace& act, int n) {
  return GroupRepresentation{&F, act.dim, act.generators, n};
}

json error_json(const std::exception& e) { return json{{"error", e.what()}}; }

}  // namespace

CheckReport run_check(const CurveInput& curve, const CheckOptions& options) {
  CheckReport out;
  json& r = out.report;
  const HyperellipticModel& model = curve.model;
  const int g = curve_validate(model);
  const auto group = generate_group(model, curve.generators);
  const ConcreteCover cover = profile_from_curve(model, group);
  const RamificationProfile& profile = cover.profile;
  const int n = profile.n;
  const GaloisField& big = cover.model.field();

  r["schema"] = 1;
  r["curve"] = curve_to_json(curve);
  r["seed"] = options.seed;
  r["extension_degree"] = cover.extension_degree;
  r["profile"] = profile_to_json(profile);
  r["hyperelliptic_involution_in_G"] = cover.has_hyperelliptic_involution;

  {
    json s;
    const int deg_r = ramification_degree(profile);
    const int lhs = 2 * g - 2;
    const int rhs = n * (2 * profile.gY - 2) + deg_r;
    const int gx = profile_validate(profile);
    s["g"] = g;
    s["hurwitz"] = {{"lhs", lhs}, {"rhs", rhs}};
    s["degR"] = deg_r;
    s["ok"] = lhs == rhs && gx == g && ramification_divisor(cover).degree() == deg_r;
    out.ok = out.ok && s["ok"].get<bool>();
    r["genus"] = s;
  }

  std::vector<GroupRepresentation> samples;

  {
    std::vector<Divisor> divisors;
    const Divisor dinf = infinity_divisor(cover.model);
    for (int k = 1; k <= 4; ++k) {
      const int deg = k * dinf.degree();
      if (deg > 2 * g - 2 && deg <= 8 * g) divisors.push_back(k * dinf);
    }
    if (profile.gY == 0) {
      const Divisor kx = canonical_divisor(cover);
      for (int k = 2; k <= 3; ++k) divisors.push_back(k * kx);
    }
    const auto random = random_invariant_divisors(cover, options.divisor_samples, 2 * g - 1, 8 * g, options.seed);
    divisors.insert(divisors.end(), random.begin(), random.end());

    json items = json::array();
    bool ok = true;
    for (const auto& d : divisors) {
      json it;
      it["divisor"] = divisor_to_json(d);
      const int deg = d.degree();
      it["deg"] = deg;
      try {
        const RRBasis rr = rr_basis(cover.model, d, std::max(rr_degree_cap(cover.model), deg));
        const ActionOnSpace act = action_on_rr(cover.model, cover.group, rr);
        samples.push_back(as_representation(big, act, n));
        const int inv = invariant_dim_concrete(act);
        it["dim"] = rr.dim();
        it["riemann_roch"] = deg + 1 - g;
        it["invariant"] = inv;
        bool item_ok = rr.dim() == deg + 1 - g;

        const InvariantDivisorSpec spec = invariant_spec(cover, d);
        if (deg > invariant_degree_bound(profile)) {
          const int formula = invariant_dim_formula(profile, spec);
          it["invariant_formula"] = formula;
          item_ok = item_ok && formula == inv;
        } else {
          it["invariant_formula"] = nullptr;
        }

        json verdicts = json::array();
        const Verdict iff = trivial_action_iff(profile, spec);
        bool consistent = verdict_matches_action(iff, act, n);
        verdicts.push_back(iff.to_json());
        const Verdict suff = faithful_sufficient(profile, spec);
        consistent = consistent && verdict_matches_action(suff, act, n);
        verdicts.push_back(suff.to_json());
        if (n >= 2 && deg >= 2 * g) {
          const Verdict v = trivial_deg_ge_2g(profile, spec);
          consistent = consistent && v.result == iff.result && verdict_matches_action(v, act, n);
          verdicts.push_back(v.to_json());
        }
        if (n >= 2 && deg == 2 * g - 1) {
          const Verdict v = trivial_deg_2gm1(profile, spec);
          consistent = consistent && v.result == iff.result && verdict_matches_action(v, act, n);
          verdicts.push_back(v.to_json());
        }
        it["verdicts"] = verdicts;
        it["verdicts_match_matrices"] = consistent;
        item_ok = item_ok && consistent;
        it["ok"] = item_ok;
        ok = ok && item_ok;
      } catch (const Error& e) {
        it["ok"] = false;
        it.update(error_json(e));
        ok = false;
      }
      items.push_back(it);
    }
    r["riemann_roch"] = {{"items", items}, {"ok", ok}};
    out.ok = out.ok && ok;
  }

  {
    json items = json::array();
    bool ok = true;
    for (int m = 1; m <= options.max_m; ++m) {
      json it;
      it["m"] = m;
      try {
        const auto basis = basis_polydiff(model, m);
        const int expected = m == 1 ? g : (2 * m - 1) * (g - 1);
        const ActionOnSpace act = action_on_polydiff(model, curve.generators, m);
        samples.push_back(as_representation(model.field(), act, n));
        it["basis"] = static_cast<int>(basis.size());
        it["expected"] = expected;
        it["holomorphic"] = true;
        const int inv_action = invariant_dim_concrete(act);
        const int formula = invariant_dim_polydiff(profile, m);
        it["invariant_action"] = inv_action;
        it["invariant_formula"] = formula;
        bool item_ok = static_cast<int>(basis.size()) == expected && inv_action == formula;
        if (profile.gY == 0) {
          const MKXReport mk = crosscheck_mKX(model, group, m);
          it["rr_mKX"] = mk.rr_dim;
          it["invariant_rr_mKX"] = mk.invariant_rr;
          item_ok = item_ok && mk.ok() && mk.basis_size == expected;
        }
        const Verdict v = faithful_polydiff(profile, m, cover.has_hyperelliptic_involution);
        it["verdict"] = v.to_json();
        it["verdict_matches_matrices"] = verdict_matches_action(v, act, n);
        item_ok = item_ok && it["verdict_matches_matrices"].get<bool>();
        it["ok"] = item_ok;
        ok = ok && item_ok;
      } catch (const Error& e) {
        it["ok"] = false;
        it.update(error_json(e));
        ok = false;
      }
      items.push_back(it);
    }
    r["polydifferentials"] = {{"items", items}, {"ok", ok}};
    out.ok = out.ok && ok;
  }

  {
    json s;
    try {
      const DeformationDim dd = deformation_dim(profile);
      const int p = static_cast<int>(big.p());
      std::optional<GroupShape> shape;
      if (n % p != 0) shape = GroupShape{n, 1};
      const HypothesisReport hyp = check_groups_hypothesis(samples, shape, p);
      bool duality = true;
      for (const auto& rep : samples) duality = duality && check_duality(rep);
      s["dim"] = dd.dim;
      s["crosscheck"] = dd.crosscheck;
      s["hypothesis"] = hyp.status();
      s["samples"] = static_cast<int>(samples.size());
      s["duality"] = duality;
      s["ok"] = dd.dim == dd.crosscheck && duality;
    } catch (const Error& e) {
      s = error_json(e);
      s["ok"] = false;
    }
    out.ok = out.ok && s["ok"].get<bool>();
    r["deformation"] = s;
  }

  r["ok"] = out.ok;
  return out;
}

}  // namespace equicurve
