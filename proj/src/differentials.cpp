#include "equicurve/differentials.hpp"

#include <set>

#include "equicurve/errors.hpp"

namespace equicurve {

namespace {

FunctionRep lift_function(const HyperellipticModel& big, const FieldEmbedding& emb, const FunctionRep& u) {
  return big.function(u.a().map(emb), u.b().map(emb), u.den().map(emb));
}

int basis_x_bound(int g, int m) { return m == 1 ? g - 1 : m * (g - 1); }
int basis_xy_bound(int g, int m) { return m == 1 ? -1 : (m - 1) * (g - 1) - 2; }

}  // namespace

FunctionRep omega_denominator(const HyperellipticModel& model) {
  if (model.char2()) return model.function(model.h(), Poly(model.field()));
  return model.y();
}

DxDivisor dx_divisor(const HyperellipticModel& model) {
  const auto group = generate_group(model, {CurveAutomorphism::hyperelliptic_involution(model)});
  const ConcreteCover cover = profile_from_curve(model, group);
  return DxDivisor{cover.model, cover.embedding(),
                   ramification_divisor(cover) - 2 * infinity_divisor(cover.model)};
}

Divisor polydiff_divisor(const DxDivisor& dx, const PolyDifferential& w) {
  const FunctionRep c = lift_function(dx.model, dx.embedding, w.coeff);
  return principal_divisor(dx.model, c) + w.m * dx.div_dx -
         w.m * principal_divisor(dx.model, omega_denominator(dx.model));
}

bool polydiff_holomorphic(const DxDivisor& dx, const PolyDifferential& w) {
  const FunctionRep c = lift_function(dx.model, dx.embedding, w.coeff);
  if (c.is_zero() || !c.is_polynomial()) return false;
  const FunctionRep den = omega_denominator(dx.model);
  std::set<Place> places;
  for (const auto& [p, n] : dx.div_dx.entries()) places.insert(p);
  for (const auto& p : places_at_infinity(dx.model)) places.insert(p);
  for (const auto& p : places) {
    const int v = valuation(dx.model, c, p) + w.m * dx.div_dx.coeff(p) - w.m * valuation(dx.model, den, p);
    if (v < 0) return false;
  }
  return true;
}

std::vector<PolyDifferential> basis_polydiff(const HyperellipticModel& model, int m) {
  const int g = curve_validate(model);
  if (m < 1) throw Error(ErrorCode::HypothesisViolated, "order m must be at least 1");
  const GaloisField& F = model.field();
  const Poly zero(F);
  std::vector<PolyDifferential> out;
  for (int i = 0; i <= basis_x_bound(g, m); ++i) {
    out.push_back({m, model.function(Poly::monomial(F.one(), i), zero), i, false});
  }
  for (int i = 0; i <= basis_xy_bound(g, m); ++i) {
    out.push_back({m, model.function(zero, Poly::monomial(F.one(), i)), i, true});
  }
  const DxDivisor dx = dx_divisor(model);
  for (const auto& w : out) {
    if (!polydiff_holomorphic(dx, w)) {
      throw Error(ErrorCode::Internal, "basis element " + w.coeff.to_string() + " omega has a pole");
    }
  }
  return out;
}

ActionOnSpace action_on_polydiff(const HyperellipticModel& model, const std::vector<CurveAutomorphism>& generators,
                                 int m) {
  const int g = curve_validate(model);
  const auto basis = basis_polydiff(model, m);
  const int nx = basis_x_bound(g, m) + 1;
  const int ny = basis_xy_bound(g, m) + 1;
  const FunctionRep w = omega_denominator(model);
  ActionOnSpace act;
  act.dim = static_cast<int>(basis.size());
  for (const auto& phi : generators) {
    check_automorphism(model, phi);
    const FunctionRep ratio = (w / apply_automorphism(model, phi, w)).pow(m) * phi.alpha().pow(m);
    Matrix mat(model.field(), act.dim, act.dim);
    for (int j = 0; j < act.dim; ++j) {
      const FunctionRep img = apply_automorphism(model, phi, basis[static_cast<std::size_t>(j)].coeff) * ratio;
      if (!img.is_polynomial() || img.a().degree() >= nx || img.b().degree() >= std::max(ny, 0)) {
        throw Error(ErrorCode::Internal, "image " + img.to_string() + " is outside the basis span");
      }
      const Fq s = img.den().lc().inverse();
      for (int i = 0; i < nx; ++i) mat(i, j) = img.a().coeff(i) * s;
      for (int i = 0; i < ny; ++i) mat(nx + i, j) = img.b().coeff(i) * s;
    }
    act.generators.push_back(std::move(mat));
  }
  return act;
}

MKXReport crosscheck_mKX(const HyperellipticModel& model, const std::vector<CurveAutomorphism>& group, int m) {
  const ConcreteCover cover = profile_from_curve(model, group);
  const Divisor mk = m * canonical_divisor(cover);
  const RRBasis rr = rr_basis(cover.model, mk, std::max(rr_degree_cap(cover.model), mk.degree()));
  MKXReport r;
  r.m = m;
  r.rr_dim = rr.dim();
  r.invariant_rr = invariant_dim_concrete(action_on_rr(cover.model, cover.group, rr));
  const ActionOnSpace act = action_on_polydiff(model, group, m);
  r.basis_size = act.dim;
  r.invariant_action = invariant_dim_concrete(act);
  r.invariant_formula = invariant_dim_polydiff(cover.profile, m);
  return r;
}

}  // namespace equicurve
