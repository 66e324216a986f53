#pragma once

#include <vector>

#include "equicurve/ramification.hpp"
#include "equicurve/rrspace.hpp"

namespace equicurve {

// coeff * omega with omega = dx^m / y^m (odd characteristic) or dx^m / h(x)^m (characteristic 2).
// Basis elements are x^i omega or x^i y omega.
struct PolyDifferential {
  int m = 1;
  FunctionRep coeff;
  int i = 0;
  bool with_y = false;
};

// y in odd characteristic, h(x) in characteristic 2.
FunctionRep omega_denominator(const HyperellipticModel& model);

// x^i omega for i < g when m = 1; otherwise x^i omega for i <= m(g-1) and x^i y omega for
// i <= (m-1)(g-1) - 2. Every element is checked to be holomorphic. Throws GenusTooSmall.
std::vector<PolyDifferential> basis_polydiff(const HyperellipticModel& model, int m);

// div(dx) = R - 2 D_inf on the model extended so that the Weierstrass places are rational.
struct DxDivisor {
  HyperellipticModel model;
  FieldEmbedding embedding;
  Divisor div_dx;
};
DxDivisor dx_divisor(const HyperellipticModel& model);

// div(coeff) + m div(dx) - m div(w) on dx.model; throws NeedsExtension when a zero of the
// coefficient is not rational there.
Divisor polydiff_divisor(const DxDivisor& dx, const PolyDifferential& w);
// Effectivity of that divisor, decided by valuations at the Weierstrass places and at infinity.
bool polydiff_holomorphic(const DxDivisor& dx, const PolyDifferential& w);

// Pullback action on the basis above; column j is the image of basis element j.
ActionOnSpace action_on_polydiff(const HyperellipticModel& model, const std::vector<CurveAutomorphism>& generators,
                                 int m);

struct MKXReport {
  int m = 0;
  int rr_dim = 0;
  int basis_size = 0;
  int invariant_rr = 0;
  int invariant_action = 0;
  int invariant_formula = 0;
  bool ok() const {
    return rr_dim == basis_size && invariant_rr == invariant_action && invariant_action == invariant_formula;
  }
};

// Compares L(m K_X) with H^0(Omega^m) for the full group list. K_X = R - 2 pi^*(Q_inf), the
// divisor of the pullback of a differential on Y = P^1. Throws QuotientNotRational.
MKXReport crosscheck_mKX(const HyperellipticModel& model, const std::vector<CurveAutomorphism>& group, int m);

}  // namespace equicurve
