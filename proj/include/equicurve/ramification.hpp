#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "equicurve/automorphism.hpp"
#include "equicurve/curve.hpp"

namespace equicurve {

// Data of one branch point Q of X -> Y = X/G.
struct BranchPoint {
  int e = 1;
  // Orders of the higher ramification groups G_0, G_1, ... down to the last nontrivial one.
  std::vector<int> filtration;

  static BranchPoint tame(int e) { return BranchPoint{e, {e}}; }
  int delta() const;
  bool wild() const { return filtration.size() > 1; }
};

struct RamificationProfile {
  int n = 1;
  int gY = 0;
  std::vector<BranchPoint> branch;
  std::optional<int> p;  // characteristic, when known
};

// Genus of X by Hurwitz. Throws BadFiltration or HurwitzInconsistent.
int profile_validate(const RamificationProfile& profile);
// deg R = sum over Q of (n / e_Q) delta_Q.
int ramification_degree(const RamificationProfile& profile);
// sum over P in X of sum_{j >= 1} (ord G_j(P) - 1).
int wild_excess(const RamificationProfile& profile);
bool is_tame(const RamificationProfile& profile);

// G-invariant divisor described on Y: one coefficient per branch point (aligned with
// profile.branch) plus unramified orbits with multiplicities.
struct InvariantDivisorSpec {
  std::vector<int> branch_coeffs;
  std::vector<std::pair<int, int>> free_orbits;  // (n_Q, number of such orbits)

  int degree(const RamificationProfile& profile) const;
};

struct FloorPushforward {
  std::vector<int> branch;
  std::vector<std::pair<int, int>> free_orbits;
  int degree = 0;
};

int floor_div(int a, int b);
int floor_mod(int a, int b);
FloorPushforward pushforward_floor(const RamificationProfile& profile, const InvariantDivisorSpec& spec);

// A concrete cover X -> X/G, over an extension of the curve's field on which every place
// with nontrivial stabilizer and every place above infinity is rational.
struct ConcreteCover {
  HyperellipticModel base;
  HyperellipticModel model;
  int extension_degree = 1;
  std::vector<CurveAutomorphism> group;  // over model.field(), identity first
  RamificationProfile profile;
  std::map<Place, int> branch_of;  // ramification point -> index into profile.branch
  std::map<Place, int> stabilizer;
  std::map<Place, int> delta;
  bool has_hyperelliptic_involution = false;

  FieldEmbedding embedding() const { return FieldEmbedding(base.field(), model.field()); }
  // Transport a divisor or automorphism from the base curve.
  Divisor lift(const Divisor& d) const;
};

// group must list every element of G (see generate_group). Throws NotAGroup, NotFaithful.
ConcreteCover profile_from_curve(const HyperellipticModel& model, const std::vector<CurveAutomorphism>& group);

// Filtration-derived i(g) = v_P(g(t) - t) for g fixing P.
int lower_ramification_index(const HyperellipticModel& model, const CurveAutomorphism& g, const Place& p);

Divisor ramification_divisor(const ConcreteCover& cover);
// pi^*(Q_inf) where Q_inf is the image of the first place above x = infinity.
Divisor pullback_infinity(const ConcreteCover& cover);
// K_X = pi^*(K_Y) + R with K_Y = -2 [Q_inf]; throws QuotientNotRational when g_Y > 0.
Divisor canonical_divisor(const ConcreteCover& cover);
// Y-side description of a G-invariant divisor on cover.model; throws NotInvariant.
InvariantDivisorSpec invariant_spec(const ConcreteCover& cover, const Divisor& d);

// Number of fixed places of an involution, and whether X/<tau> has genus 0.
bool is_hyperelliptic_involution(const HyperellipticModel& model, const CurveAutomorphism& tau);

}  // namespace equicurve
