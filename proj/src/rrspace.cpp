#include "equicurve/rrspace.hpp"

#include <algorithm>
#include <map>

#include "equicurve/errors.hpp"

namespace equicurve {

int rr_degree_cap(const HyperellipticModel& model) { return 8 * model.genus() + 16; }

namespace {

// Rows expressing "v_P(sum_j c_j u_j) >= r" for the generators u_j = P_j(X) + Q_j(X) Y on a chart.
void local_rows(const ChartData& cd, int r, const std::vector<std::pair<int, int>>& gens, int width,
                std::vector<Vec>& rows) {
  if (r <= 0) return;
  const LocalExpansion le = chart_expansion(*cd.rel, cd.a, cd.b, cd.ramified, r);
  int maxpow = 0;
  for (const auto& [pw, hasy] : gens) maxpow = std::max(maxpow, pw);
  std::vector<Series> powers;
  powers.push_back(Series::constant(le.x.field().one(), r));
  for (int i = 1; i <= maxpow; ++i) powers.push_back(powers.back() * le.x);
  std::vector<Series> cols;
  for (const auto& [pw, hasy] : gens) {
    const Series& xp = powers[static_cast<std::size_t>(pw)];
    cols.push_back(hasy ? xp * le.y : xp);
  }
  for (int k = 0; k < r; ++k) {
    Vec row;
    row.reserve(static_cast<std::size_t>(width));
    for (const auto& c : cols) row.push_back(c.coeff(k));
    rows.push_back(std::move(row));
  }
}

}  // namespace

RRBasis rr_basis(const HyperellipticModel& model, const Divisor& d, int max_degree) {
  const GaloisField& F = model.field();
  const int g = model.genus();
  if (max_degree <= 0) max_degree = rr_degree_cap(model);
  if (d.degree() > max_degree) {
    throw Error(ErrorCode::BoundExceeded,
                "deg D = " + std::to_string(d.degree()) + " exceeds the cap " + std::to_string(max_degree));
  }
  std::map<std::uint32_t, int> c;  // x-value -> power of (x - a) in the denominator
  std::map<std::uint32_t, Fq> xval;
  for (const auto& [p, n] : d.entries()) {
    if (!p.rational()) throw NeedsExtensionError(2, "place " + p.id() + " in the support has degree 2");
    if (p.at_infinity()) continue;
    const int need = n > 0 ? (n + p.e - 1) / p.e : 0;
    auto& slot = c[p.a.value()];
    slot = std::max(slot, need);
    xval.emplace(p.a.value(), p.a);
  }
  Poly den = Poly::constant(F.one());
  for (const auto& [key, k] : c) den *= Poly::linear_root(xval.at(key)).pow(static_cast<unsigned>(k));

  const auto inf = places_at_infinity(model);
  if (!inf.front().rational()) throw NeedsExtensionError(2, "places above infinity have degree 2");
  const int einf = inf.front().e;
  int big_m = -(1 << 28);
  for (const auto& p : inf) big_m = std::max(big_m, d.coeff(p) + p.e * den.degree());
  const int bound = floor_div(big_m, einf) + g + 2;

  RRBasis out{model, d, den, bound, {}, {}};
  if (bound < 0) return out;
  const int na = bound + 1;
  const int width = 2 * na;
  std::vector<Vec> rows;

  // finite places over the support
  for (const auto& [key, k] : c) {
    for (const auto& p : places_over(model, xval.at(key))) {
      const int r = -d.coeff(p) + p.e * k;
      std::vector<std::pair<int, int>> gens;
      for (int i = 0; i < na; ++i) gens.emplace_back(i, 0);
      for (int i = 0; i < na; ++i) gens.emplace_back(i, 1);
      local_rows(chart_data(model, p), r, gens, width, rows);
    }
  }
  // places at infinity: A + B y = x^N (A~(X) + B~(X) Y), A-monomial x^i -> X^{N-i}, B-monomial -> X^{N-g-1-i} Y
  const int big_n = bound + g + 1;
  for (const auto& p : inf) {
    const int r = p.e * big_n - d.coeff(p) - p.e * den.degree();
    std::vector<std::pair<int, int>> gens;
    for (int i = 0; i < na; ++i) gens.emplace_back(big_n - i, 0);
    for (int i = 0; i < na; ++i) gens.emplace_back(big_n - g - 1 - i, 1);
    local_rows(chart_data(model, p), r, gens, width, rows);
  }

  out.coords = kernel_basis(Matrix(F, rows, width));
  for (const auto& v : out.coords) {
    const Poly a(F, Vec(v.begin(), v.begin() + na));
    const Poly b(F, Vec(v.begin() + na, v.end()));
    out.basis.push_back(model.function(a, b, den));
  }
  return out;
}

std::optional<Vec> RRBasis::coordinates(const FunctionRep& u) const {
  const GaloisField& F = model.field();
  if (basis.empty()) {
    if (u.is_zero()) return Vec{};
    return std::nullopt;
  }
  const FunctionRep scaled = u * model.function(den, Poly(F));
  if (!scaled.is_polynomial()) return std::nullopt;
  const int na = degree_bound + 1;
  if (scaled.a().degree() >= na || scaled.b().degree() >= na) return std::nullopt;
  Vec target(static_cast<std::size_t>(2 * na), F.zero());
  const Fq dinv = scaled.den().lc().inverse();
  for (int i = 0; i < na; ++i) {
    target[static_cast<std::size_t>(i)] = scaled.a().coeff(i) * dinv;
    target[static_cast<std::size_t>(na + i)] = scaled.b().coeff(i) * dinv;
  }
  const Matrix m = Matrix(F, coords, 2 * na).transpose();
  return m.solve(target);
}

ActionOnSpace action_on_rr(const HyperellipticModel& model, const std::vector<CurveAutomorphism>& generators,
                           const RRBasis& basis) {
  ActionOnSpace act;
  act.dim = basis.dim();
  for (const auto& g : generators) {
    if (!(divisor_image(model, g, basis.divisor) == basis.divisor)) {
      throw Error(ErrorCode::NotInvariant, "divisor is not invariant under " + g.to_string());
    }
    Matrix m(model.field(), act.dim, act.dim);
    for (int j = 0; j < act.dim; ++j) {
      const auto coords = basis.coordinates(apply_automorphism(model, g, basis.basis[static_cast<std::size_t>(j)]));
      if (!coords) throw Error(ErrorCode::Internal, "image of a basis function left L(D)");
      for (int i = 0; i < act.dim; ++i) m(i, j) = (*coords)[static_cast<std::size_t>(i)];
    }
    act.generators.push_back(std::move(m));
  }
  return act;
}

int invariant_dim_concrete(const ActionOnSpace& action) {
  if (action.dim == 0) return 0;
  if (action.generators.empty()) return action.dim;
  std::vector<Matrix> blocks;
  const GaloisField& F = action.generators.front().field();
  for (const auto& m : action.generators) blocks.push_back(m - Matrix::identity(F, action.dim));
  return action.dim - vstack(blocks).rank();
}

boost::rational<long long> invariant_dim_formula_value(const RamificationProfile& profile,
                                                       const InvariantDivisorSpec& spec) {
  const long long deg = spec.degree(profile);
  boost::rational<long long> v(1 - profile.gY);
  v += boost::rational<long long>(deg, profile.n);
  for (std::size_t i = 0; i < spec.branch_coeffs.size(); ++i) {
    const int e = profile.branch[i].e;
    v -= boost::rational<long long>(floor_mod(spec.branch_coeffs[i], e), e);
  }
  return v;
}

int invariant_degree_bound(const RamificationProfile& profile) {
  const int gx = profile_validate(profile);
  return 2 * gx - 2 - wild_excess(profile);
}

int invariant_dim_formula(const RamificationProfile& profile, const InvariantDivisorSpec& spec) {
  const int bound = invariant_degree_bound(profile);
  const int deg = spec.degree(profile);
  if (deg <= bound) {
    throw Error(ErrorCode::DegreeTooSmall,
                "deg D = " + std::to_string(deg) + " does not exceed " + std::to_string(bound));
  }
  const auto v = invariant_dim_formula_value(profile, spec);
  if (v.denominator() != 1) throw Error(ErrorCode::Internal, "invariant dimension formula is not integral");
  return static_cast<int>(v.numerator());
}

int invariant_dim_differentials(const RamificationProfile& profile) {
  const int gx = profile_validate(profile);
  if (gx < 2) throw Error(ErrorCode::GenusTooSmall, "g_X = " + std::to_string(gx) + " < 2");
  if (is_tame(profile)) return profile.gY;
  int v = profile.gY - 1;
  for (const auto& b : profile.branch) {
    if (b.wild()) v += b.delta() / b.e;
  }
  return v;
}

int invariant_dim_polydiff(const RamificationProfile& profile, int m) {
  const int gx = profile_validate(profile);
  if (gx < 2) throw Error(ErrorCode::GenusTooSmall, "g_X = " + std::to_string(gx) + " < 2");
  if (m < 1) throw Error(ErrorCode::HypothesisViolated, "order m must be at least 1");
  int value;
  if (m == 1 && is_tame(profile)) {
    value = profile.gY;
  } else {
    value = (2 * m - 1) * (profile.gY - 1);
    for (const auto& b : profile.branch) value += floor_div(m * b.delta(), b.e);
  }
  if (m == 1 && value != invariant_dim_differentials(profile)) {
    throw Error(ErrorCode::Internal, "the two formulas for invariant differentials disagree");
  }
  return value;
}

}  // namespace equicurve
