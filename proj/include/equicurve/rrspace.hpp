#pragma once

#include <optional>
#include <vector>

#include <boost/rational.hpp>

#include "equicurve/automorphism.hpp"
#include "equicurve/matrix.hpp"
#include "equicurve/ramification.hpp"

namespace equicurve {

// Basis of L(D) = { u : v_P(u) >= -n_P for all P }, written as (A + B y) / den with a
// fixed denominator. coords holds the reduced echelon coefficient vectors
// (A_0, ..., A_d, B_0, ..., B_d).
struct RRBasis {
  HyperellipticModel model;
  Divisor divisor;
  Poly den;
  int degree_bound = -1;
  std::vector<Vec> coords;
  std::vector<FunctionRep> basis;

  int dim() const { return static_cast<int>(basis.size()); }
  // Coordinates of u in the basis, or nullopt when u is not in L(D).
  std::optional<Vec> coordinates(const FunctionRep& u) const;
};

// Default cap on deg D: 8g + 16.
int rr_degree_cap(const HyperellipticModel& model);
RRBasis rr_basis(const HyperellipticModel& model, const Divisor& d, int max_degree = 0);

// Matrices of group elements on a space with a fixed basis; column j is the image of basis vector j.
struct ActionOnSpace {
  int dim = 0;
  std::vector<Matrix> generators;
};

ActionOnSpace action_on_rr(const HyperellipticModel& model, const std::vector<CurveAutomorphism>& generators,
                           const RRBasis& basis);
// Dimension of the joint fixed space.
int invariant_dim_concrete(const ActionOnSpace& action);

// 1 - g_Y + deg(D)/n - sum <n_Q/e_Q>, as an exact rational, without checking hypotheses.
boost::rational<long long> invariant_dim_formula_value(const RamificationProfile& profile,
                                                       const InvariantDivisorSpec& spec);
// deg D must exceed 2 g_X - 2 - sum_P sum_{j>=1} (ord G_j(P) - 1).
int invariant_degree_bound(const RamificationProfile& profile);
// Throws DegreeTooSmall outside the degree hypothesis.
int invariant_dim_formula(const RamificationProfile& profile, const InvariantDivisorSpec& spec);

// Invariant dimension of H^0(X, Omega^{(x)m}). Throws GenusTooSmall when g_X < 2.
int invariant_dim_polydiff(const RamificationProfile& profile, int m);
// The alternative formula for m = 1 in terms of wildly ramified branch points.
int invariant_dim_differentials(const RamificationProfile& profile);

}  // namespace equicurve
