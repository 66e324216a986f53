#include "equicurve/ramification.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "equicurve/errors.hpp"

namespace equicurve {

int BranchPoint::delta() const {
  int d = 0;
  for (int o : filtration) d += o - 1;
  return d;
}

namespace {

bool is_power_of(int v, int p) {
  if (v < 1) return false;
  while (v % p == 0) v /= p;
  return v == 1;
}

}  // namespace

int profile_validate(const RamificationProfile& profile) {
  if (profile.n < 1) throw Error(ErrorCode::BadFiltration, "group order must be positive");
  if (profile.gY < 0) throw Error(ErrorCode::HurwitzInconsistent, "negative quotient genus");
  for (std::size_t i = 0; i < profile.branch.size(); ++i) {
    const auto& b = profile.branch[i];
    const std::string where = "branch point " + std::to_string(i) + ": ";
    if (b.e < 2) throw Error(ErrorCode::BadFiltration, where + "ramification index must be at least 2");
    if (profile.n % b.e != 0) throw Error(ErrorCode::BadFiltration, where + "e does not divide n");
    if (b.filtration.empty() || b.filtration.front() != b.e) {
      throw Error(ErrorCode::BadFiltration, where + "ord(G_0) must equal e");
    }
    for (std::size_t j = 1; j < b.filtration.size(); ++j) {
      const int o = b.filtration[j];
      if (o < 2 || b.filtration[j - 1] % o != 0) {
        throw Error(ErrorCode::BadFiltration, where + "filtration orders must be nontrivial and nested");
      }
    }
    if (profile.p) {
      const int p = *profile.p;
      if (b.wild()) {
        for (std::size_t j = 1; j < b.filtration.size(); ++j) {
          if (!is_power_of(b.filtration[j], p)) {
            throw Error(ErrorCode::BadFiltration, where + "G_j for j >= 1 must be a p-group");
          }
        }
        if ((b.e / b.filtration[1]) % p == 0) throw Error(ErrorCode::BadFiltration, where + "G_0/G_1 must have order prime to p");
      } else if (b.e % p == 0) {
        throw Error(ErrorCode::BadFiltration, where + "p divides e but the filtration stops at G_0");
      }
    }
  }
  const int rhs = profile.n * (2 * profile.gY - 2) + ramification_degree(profile);
  if (rhs % 2 != 0 || rhs < -2) {
    throw Error(ErrorCode::HurwitzInconsistent,
                "Hurwitz gives 2g_X - 2 = " + std::to_string(rhs) + ", which is not an admissible value");
  }
  return rhs / 2 + 1;
}

int ramification_degree(const RamificationProfile& profile) {
  int d = 0;
  for (const auto& b : profile.branch) d += profile.n / b.e * b.delta();
  return d;
}

int wild_excess(const RamificationProfile& profile) {
  int d = 0;
  for (const auto& b : profile.branch) d += profile.n / b.e * (b.delta() - (b.e - 1));
  return d;
}

bool is_tame(const RamificationProfile& profile) {
  return std::none_of(profile.branch.begin(), profile.branch.end(), [](const BranchPoint& b) { return b.wild(); });
}

int InvariantDivisorSpec::degree(const RamificationProfile& profile) const {
  if (branch_coeffs.size() != profile.branch.size()) {
    throw Error(ErrorCode::Parse, "divisor has " + std::to_string(branch_coeffs.size()) +
                                      " branch coefficients for " + std::to_string(profile.branch.size()) +
                                      " branch points");
  }
  int d = 0;
  for (std::size_t i = 0; i < branch_coeffs.size(); ++i) d += profile.n / profile.branch[i].e * branch_coeffs[i];
  for (const auto& [nq, count] : free_orbits) d += profile.n * nq * count;
  return d;
}

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

int floor_mod(int a, int b) { return a - b * floor_div(a, b); }

FloorPushforward pushforward_floor(const RamificationProfile& profile, const InvariantDivisorSpec& spec) {
  spec.degree(profile);
  FloorPushforward out;
  for (std::size_t i = 0; i < spec.branch_coeffs.size(); ++i) {
    const int v = floor_div(spec.branch_coeffs[i], profile.branch[i].e);
    out.branch.push_back(v);
    out.degree += v;
  }
  out.free_orbits = spec.free_orbits;
  for (const auto& [nq, count] : spec.free_orbits) out.degree += nq * count;
  return out;
}

// ---------------------------------------------------------------- concrete covers

int lower_ramification_index(const HyperellipticModel& model, const CurveAutomorphism& g, const Place& p) {
  const GaloisField& F = model.field();
  FunctionRep t = model.x();
  switch (p.kind) {
    case PlaceKind::FiniteSplit:
      t = model.x() - model.constant(p.a);
      break;
    case PlaceKind::FiniteRamified:
      t = model.y() - model.constant(p.y);
      break;
    case PlaceKind::InfiniteSplit:
      t = model.x().inverse();
      break;
    case PlaceKind::InfiniteRamified: {
      const Poly xg = Poly::monomial(F.one(), model.genus() + 1);
      t = model.function(-(xg * p.y), Poly::constant(F.one()), xg);
      break;
    }
    default:
      throw NeedsExtensionError(2, "place " + p.id() + " is not rational");
  }
  const FunctionRep diff = apply_automorphism(model, g, t) - t;
  if (diff.is_zero()) return kInfiniteOrder;
  return valuation(model, diff, p);
}

Divisor ConcreteCover::lift(const Divisor& d) const { return lift_divisor(model, d, embedding()); }

namespace {

struct FixedData {
  std::vector<CurveAutomorphism> stab;
  std::vector<int> index;  // i(g) for each stabilizer element
};

FixedData stabilizer_data(const HyperellipticModel& model, const std::vector<CurveAutomorphism>& group, const Place& p) {
  FixedData fd;
  for (const auto& g : group) {
    if (place_image(model, g, p) == p) {
      fd.stab.push_back(g);
      fd.index.push_back(g.is_identity() ? kInfiniteOrder : lower_ramification_index(model, g, p));
    }
  }
  return fd;
}

Poly special_x_values(const HyperellipticModel& model, const std::vector<CurveAutomorphism>& group) {
  const GaloisField& F = model.field();
  Poly xs = model.char2() ? model.h() : model.f();
  std::set<std::uint32_t> seen;
  for (const auto& g : group) {
    if (g.alpha().is_one()) continue;
    const Fq x0 = g.beta() / (F.one() - g.alpha());
    if (seen.insert(x0.value()).second) xs *= Poly::linear_root(x0);
  }
  return xs;
}

std::vector<Place> candidate_places(const HyperellipticModel& model, const Poly& xs) {
  std::vector<Place> out;
  if (xs.degree() > 0) {
    for (const auto& [a, mult] : roots_with_multiplicity(xs)) {
      for (const auto& p : places_over(model, a)) out.push_back(p);
    }
  }
  for (const auto& p : places_at_infinity(model)) out.push_back(p);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

ConcreteCover profile_from_curve(const HyperellipticModel& model, const std::vector<CurveAutomorphism>& group) {
  check_group(model, group);
  const Poly xs = special_x_values(model, group);
  const int ext = rational_fibre_degree(model, xs, true);
  ConcreteCover cover{model, model.base_change(ext), ext, {}, {}, {}, {}, {}, false};
  const FieldEmbedding emb = cover.embedding();
  for (const auto& g : group) cover.group.push_back(g.map(emb));
  const auto& big = cover.model;
  const int n = static_cast<int>(group.size());
  cover.profile.n = n;
  cover.profile.p = static_cast<int>(model.field().p());

  int total_delta = 0;
  for (const auto& p : candidate_places(big, xs.map(emb))) {
    if (cover.branch_of.count(p)) continue;
    const FixedData fd = stabilizer_data(big, cover.group, p);
    const int e = static_cast<int>(fd.stab.size());
    if (e == 1) continue;
    BranchPoint bp;
    bp.e = e;
    for (int j = 0;; ++j) {
      const int ord = static_cast<int>(std::count_if(fd.index.begin(), fd.index.end(), [j](int i) { return i >= j + 1; }));
      if (ord <= 1) break;
      bp.filtration.push_back(ord);
    }
    const int idx = static_cast<int>(cover.profile.branch.size());
    cover.profile.branch.push_back(bp);
    for (const auto& g : cover.group) {
      const Place q = place_image(big, g, p);
      if (cover.branch_of.emplace(q, idx).second) {
        cover.stabilizer[q] = e;
        cover.delta[q] = bp.delta();
        total_delta += bp.delta();
      }
    }
  }
  const int gx = big.genus();
  const int num = 2 * gx - 2 - total_delta;
  if (num % n != 0 || (num / n + 2) % 2 != 0 || num / n + 2 < 0) {
    throw Error(ErrorCode::HurwitzInconsistent, "Hurwitz formula has no integral quotient genus");
  }
  cover.profile.gY = (num / n + 2) / 2;
  for (const auto& g : cover.group) {
    if (!g.is_identity() && element_order(big, g) == 2 && is_hyperelliptic_involution(big, g)) {
      cover.has_hyperelliptic_involution = true;
    }
  }
  return cover;
}

bool is_hyperelliptic_involution(const HyperellipticModel& model, const CurveAutomorphism& tau) {
  if (tau.is_identity() || !compose(tau, tau).is_identity()) return false;
  if (tau.fixes_x()) return true;
  const std::vector<CurveAutomorphism> sub{CurveAutomorphism::identity(model), tau};
  const Poly xs = special_x_values(model, sub);
  const int ext = rational_fibre_degree(model, xs, true);
  const HyperellipticModel big = model.base_change(ext);
  const FieldEmbedding emb(model.field(), big.field());
  const CurveAutomorphism t = tau.map(emb);
  int total = 0;
  for (const auto& p : candidate_places(big, xs.map(emb))) {
    if (place_image(big, t, p) == p) total += lower_ramification_index(big, t, p);
  }
  // 2 g_X - 2 = 2 (2 g' - 2) + total
  return 2 * big.genus() - 2 - total == -4;
}

Divisor ramification_divisor(const ConcreteCover& cover) {
  Divisor r;
  for (const auto& [p, d] : cover.delta) r.add(p, d);
  return r;
}

Divisor pullback_infinity(const ConcreteCover& cover) {
  const Place first = places_at_infinity(cover.model).front();
  Divisor d;
  for (const auto& g : cover.group) {
    const Place q = place_image(cover.model, g, first);
    if (d.coeff(q) == 0) {
      auto it = cover.stabilizer.find(q);
      d.add(q, it == cover.stabilizer.end() ? 1 : it->second);
    }
  }
  return d;
}

Divisor canonical_divisor(const ConcreteCover& cover) {
  if (cover.profile.gY != 0) {
    throw Error(ErrorCode::QuotientNotRational,
                "quotient has genus " + std::to_string(cover.profile.gY) + "; a canonical divisor on Y is not fixed");
  }
  return ramification_divisor(cover) - 2 * pullback_infinity(cover);
}

InvariantDivisorSpec invariant_spec(const ConcreteCover& cover, const Divisor& d) {
  if (!divisor_invariant(cover.model, cover.group, d)) {
    throw Error(ErrorCode::NotInvariant, "divisor " + d.to_string() + " is not G-invariant");
  }
  InvariantDivisorSpec spec;
  spec.branch_coeffs.assign(cover.profile.branch.size(), 0);
  for (const auto& [p, idx] : cover.branch_of) spec.branch_coeffs[static_cast<std::size_t>(idx)] = d.coeff(p);
  std::set<Place> done;
  std::map<int, int> free;
  for (const auto& [p, n] : d.entries()) {
    if (cover.branch_of.count(p) || done.count(p)) continue;
    if (!p.rational()) throw NeedsExtensionError(2, "place " + p.id() + " is not rational");
    for (const auto& g : cover.group) done.insert(place_image(cover.model, g, p));
    ++free[n];
  }
  for (const auto& [nq, count] : free) spec.free_orbits.emplace_back(nq, count);
  return spec;
}

}  // namespace equicurve
