#include "equicurve/curve.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "equicurve/errors.hpp"

namespace equicurve {

namespace {

int ceil_half(int n) { return n >= 0 ? (n + 1) / 2 : -((-n) / 2); }

Poly divide_by_root_power(const Poly& p, Fq a, int k) {
  if (p.is_zero() || k == 0) return p;
  return p / Poly::linear_root(a).pow(static_cast<unsigned>(k));
}

}  // namespace

int model_genus(const Poly& h, const Poly& f) {
  if (&h.field() != &f.field()) throw Error(ErrorCode::Internal, "h and f over different fields");
  const GaloisField& F = f.field();
  if (f.is_zero()) throw Error(ErrorCode::NotSmooth, "f = 0 gives a reducible curve");
  if (F.p() != 2) {
    if (!h.is_zero()) {
      throw Error(ErrorCode::WrongCharacteristic, "odd characteristic models take the form y^2 = f(x)");
    }
    if (f.degree() <= 0) throw Error(ErrorCode::NotSmooth, "f is constant");
    if (!poly_squarefree(f)) throw Error(ErrorCode::NotSmooth, "f has a repeated root");
    return ceil_half(f.degree()) - 1;
  }
  if (h.is_zero()) throw Error(ErrorCode::WrongCharacteristic, "characteristic 2 models need h != 0");
  const int g = std::max(h.degree() - 1, ceil_half(f.degree()) - 1);
  if (g < 0) throw Error(ErrorCode::NotSmooth, "degenerate characteristic 2 model");
  const Poly hd = h.derivative();
  const Poly fd = f.derivative();
  if (gcd(h, hd * hd * f + fd * fd).degree() > 0) {
    throw Error(ErrorCode::NotSmooth, "h and h'^2 f + f'^2 have a common root");
  }
  const Poly H = h.reversed(g + 1);
  const Poly Fi = f.reversed(2 * g + 2);
  const Fq zero = F.zero();
  if (H(zero).is_zero()) {
    const Fq dh = H.derivative()(zero);
    const Fq df = Fi.derivative()(zero);
    if ((dh * dh * Fi(zero) + df * df).is_zero()) throw Error(ErrorCode::NotSmooth, "singular at infinity");
  }
  return g;
}

HyperellipticModel::HyperellipticModel(Poly h, Poly f) {
  genus_ = model_genus(h, f);
  const int g = genus_;
  auto chart = std::make_shared<CurveRelation>(CurveRelation{h.is_zero() ? h : h.reversed(g + 1), f.reversed(2 * g + 2)});
  rel_ = std::make_shared<const CurveRelation>(CurveRelation{std::move(h), std::move(f)});
  chart_ = std::move(chart);
}

HyperellipticModel HyperellipticModel::odd(Poly f) {
  Poly h(f.field());
  return HyperellipticModel(std::move(h), std::move(f));
}

FunctionRep HyperellipticModel::function(Poly a, Poly b, Poly den) const {
  return FunctionRep(rel_, std::move(a), std::move(b), std::move(den));
}

FunctionRep HyperellipticModel::function(Poly a, Poly b) const {
  return FunctionRep(rel_, std::move(a), std::move(b));
}

HyperellipticModel HyperellipticModel::base_change(const GaloisField& big) const {
  if (&big == &field()) return *this;
  const FieldEmbedding emb(field(), big);
  return HyperellipticModel(h().map(emb), f().map(emb));
}

HyperellipticModel HyperellipticModel::base_change(int degree) const {
  return base_change(GaloisField::make(field().p(), static_cast<std::uint64_t>(field().k()) * degree));
}

int curve_validate(const HyperellipticModel& model) {
  if (model.genus() < 2) {
    throw Error(ErrorCode::GenusTooSmall, "genus " + std::to_string(model.genus()) + " < 2");
  }
  return model.genus();
}

// ---------------------------------------------------------------- places

std::tuple<int, std::uint32_t, int, std::uint32_t> Place::key() const {
  return {at_infinity() ? 1 : 0, at_infinity() ? 0u : a.value(), degree, y.value()};
}

std::string Place::id() const {
  std::ostringstream os;
  switch (kind) {
    case PlaceKind::FiniteRamified:
    case PlaceKind::FiniteSplit:
      os << "fin:a=" << a.value() << ":y=" << y.value();
      break;
    case PlaceKind::FiniteInert:
      os << "fin:a=" << a.value() << ":deg2";
      break;
    case PlaceKind::InfiniteRamified:
      os << "inf:ram";
      break;
    case PlaceKind::InfiniteSplit:
      os << (branch > 0 ? "inf:+" : "inf:-");
      break;
    case PlaceKind::InfiniteInert:
      os << "inf:deg2";
      break;
  }
  return os.str();
}

namespace {

std::vector<Place> fibre(const CurveRelation& rel, Fq a, bool infinity) {
  const GaloisField& F = rel.f.field();
  const Fq c1 = rel.h(a);
  const Fq c0 = rel.f(a);
  const Fq xa = infinity ? F.zero() : a;
  std::vector<Place> out;
  const bool ram = F.p() == 2 ? c1.is_zero() : (c1 * c1 + F.from_int(4) * c0).is_zero();
  if (ram) {
    const Fq b = F.p() == 2 ? *F.sqrt(c0) : c1 * F.from_int(2).inverse();
    out.push_back(Place{infinity ? PlaceKind::InfiniteRamified : PlaceKind::FiniteRamified, xa, b, 1, 2, 0});
    return out;
  }
  const auto roots = F.quadratic_roots(-c1, -c0);
  if (roots.empty()) {
    out.push_back(Place{infinity ? PlaceKind::InfiniteInert : PlaceKind::FiniteInert, xa, F.zero(), 2, 1, 0});
    return out;
  }
  for (std::size_t i = 0; i < roots.size(); ++i) {
    out.push_back(Place{infinity ? PlaceKind::InfiniteSplit : PlaceKind::FiniteSplit, xa, roots[i], 1, 1,
                        infinity ? (i == 0 ? 1 : -1) : 0});
  }
  return out;
}

}  // namespace

std::vector<Place> places_over(const HyperellipticModel& model, Fq a) {
  return fibre(*model.relation(), a, false);
}

std::vector<Place> places_at_infinity(const HyperellipticModel& model) {
  return fibre(model.chart(), model.field().zero(), true);
}

Place place_from_id(const HyperellipticModel& model, const std::string& id) {
  const auto bad = [&id]() { return Error(ErrorCode::Parse, "unknown place id '" + id + "'"); };
  const GaloisField& F = model.field();
  if (id.rfind("inf:", 0) == 0) {
    for (const auto& p : places_at_infinity(model)) {
      if (p.id() == id) return p;
    }
    throw bad();
  }
  if (id.rfind("fin:a=", 0) != 0) throw bad();
  const auto colon = id.find(':', 6);
  if (colon == std::string::npos) throw bad();
  std::uint64_t a = 0;
  try {
    std::size_t used = 0;
    a = std::stoull(id.substr(6, colon - 6), &used);
    if (used != colon - 6) throw bad();
  } catch (const std::logic_error&) {
    throw bad();
  }
  if (a >= F.q()) throw bad();
  for (const auto& p : places_over(model, F.element(a))) {
    if (p.id() == id) return p;
  }
  throw bad();
}

std::vector<Place> lift_place(const HyperellipticModel& big, const Place& p, const FieldEmbedding& emb) {
  const Fq a = emb(p.a);
  std::vector<Place> candidates = p.at_infinity() ? places_at_infinity(big) : places_over(big, a);
  if (p.degree == 2) return candidates;
  for (const auto& c : candidates) {
    if (c.y == emb(p.y)) return {c};
  }
  throw Error(ErrorCode::Internal, "place does not lift to the base change");
}

// ---------------------------------------------------------------- divisors

void Divisor::add(const Place& p, int n) {
  if (n == 0) return;
  auto it = coeffs_.find(p);
  if (it == coeffs_.end()) {
    coeffs_.emplace(p, n);
    return;
  }
  it->second += n;
  if (it->second == 0) coeffs_.erase(it);
}

int Divisor::coeff(const Place& p) const {
  auto it = coeffs_.find(p);
  return it == coeffs_.end() ? 0 : it->second;
}

int Divisor::degree() const {
  int d = 0;
  for (const auto& [p, n] : coeffs_) d += n * p.degree;
  return d;
}

bool Divisor::is_effective() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& e) { return e.second >= 0; });
}

Divisor& Divisor::operator+=(const Divisor& o) {
  for (const auto& [p, n] : o.coeffs_) add(p, n);
  return *this;
}

Divisor& Divisor::operator-=(const Divisor& o) {
  for (const auto& [p, n] : o.coeffs_) add(p, -n);
  return *this;
}

Divisor operator*(int k, const Divisor& d) {
  Divisor r;
  for (const auto& [p, n] : d.coeffs_) r.add(p, k * n);
  return r;
}

std::string Divisor::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, n] : coeffs_) {
    if (!first) os << " + ";
    first = false;
    os << n << "[" << p.id() << "]";
  }
  return os.str();
}

Divisor lift_divisor(const HyperellipticModel& big, const Divisor& d, const FieldEmbedding& emb) {
  Divisor r;
  for (const auto& [p, n] : d.entries()) {
    for (const auto& q : lift_place(big, p, emb)) r.add(q, n);
  }
  return r;
}

Divisor fibre_divisor(const HyperellipticModel& model, Fq a) {
  Divisor d;
  for (const auto& p : places_over(model, a)) {
    if (!p.rational()) throw NeedsExtensionError(2, "fibre over x = " + std::to_string(a.value()) + " is not rational");
    d.add(p, p.e);
  }
  return d;
}

Divisor infinity_divisor(const HyperellipticModel& model) {
  Divisor d;
  for (const auto& p : places_at_infinity(model)) {
    if (!p.rational()) throw NeedsExtensionError(2, "fibre over infinity is not rational");
    d.add(p, p.e);
  }
  return d;
}

// ---------------------------------------------------------------- local expansions

LocalExpansion chart_expansion(const CurveRelation& rel, Fq a, Fq b, bool ramified, int precision) {
  const GaloisField& F = rel.f.field();
  const Poly ha = rel.h.taylor_shift(a);
  const Poly fa = rel.f.taylor_shift(a);
  const Series t = Series::variable(F, precision);
  if (!ramified) {
    Series y = series_quadratic_root(Series::from_poly(ha, precision), Series::from_poly(fa, precision), b);
    return {Series::constant(a, precision) + t, std::move(y)};
  }
  // t = y - b is a local parameter; solve for x - a = s(t) by Newton iteration
  const Poly dha = ha.derivative();
  const Poly dfa = fa.derivative();
  Series s(F, 1);
  int cur = 1;
  bool last = false;
  while (!last) {
    if (cur >= precision) last = true;
    cur = std::min(2 * cur, precision);
    s = Series(F, s.coeffs(), cur);
    const Series yt = Series::constant(b, cur) + Series::variable(F, cur);
    const Series g = yt * yt - Series::evaluate(ha, s) * yt - Series::evaluate(fa, s);
    const Series gd = -(Series::evaluate(dha, s) * yt) - Series::evaluate(dfa, s);
    s = s - g * gd.inverse();
  }
  return {Series::constant(a, precision) + s, Series::constant(b, precision) + t};
}

ChartData chart_data(const HyperellipticModel& model, const Place& p) {
  if (!p.rational()) throw NeedsExtensionError(2, "place " + p.id() + " has degree 2");
  if (p.at_infinity()) return {&model.chart(), model.field().zero(), p.y, p.ramified(), p.e};
  return {model.relation().get(), p.a, p.y, p.ramified(), p.e};
}

int default_precision(const HyperellipticModel& model) { return 4 * model.genus() + 8; }
int precision_cap(const HyperellipticModel& model) { return 16 * default_precision(model); }

namespace {

struct ChartPair {
  Poly a;
  Poly b;
  int offset;
};

// a(x) + b(x) y = x^N (A(X) + B(X) Y) on the chart at infinity
ChartPair to_chart(const HyperellipticModel& model, const Place& p, const Poly& a, const Poly& b) {
  if (!p.at_infinity()) return {a, b, 0};
  const int g = model.genus();
  int n = a.degree();
  if (!b.is_zero()) n = std::max(n, b.degree() + g + 1);
  Poly A = a.is_zero() ? a : a.reversed(n);
  Poly B = b.is_zero() ? b : b.reversed(n - g - 1);
  return {std::move(A), std::move(B), -p.e * n};
}

int chart_pair_valuation(const HyperellipticModel& model, const ChartData& cd, Poly A, Poly B) {
  const int k = std::min(A.order_at(cd.a), B.order_at(cd.a));
  A = divide_by_root_power(A, cd.a, k);
  B = divide_by_root_power(B, cd.a, k);
  if (cd.ramified) {
    const int va = (A + B * cd.b).order_at(cd.a);
    const int vb = B.order_at(cd.a);
    const int v = std::min(va >= kInfiniteOrder ? kInfiniteOrder : 2 * va,
                           vb >= kInfiniteOrder ? kInfiniteOrder : 2 * vb + 1);
    return v + cd.e * k;
  }
  for (int prec = default_precision(model); prec <= precision_cap(model); prec *= 2) {
    const LocalExpansion le = chart_expansion(*cd.rel, cd.a, cd.b, false, prec);
    const Series s = Series::evaluate(A, le.x) + Series::evaluate(B, le.x) * le.y;
    if (auto v = s.valuation()) return *v + cd.e * k;
  }
  throw Error(ErrorCode::PrecisionExhausted, "valuation exceeds the series precision cap");
}

// Lowest coefficient of the expansion of A + B Y at the chart point, with its index.
std::pair<int, Fq> leading_term(const HyperellipticModel& model, const ChartData& cd, const Poly& A, const Poly& B) {
  const int v = chart_pair_valuation(model, cd, A, B);
  const LocalExpansion le = chart_expansion(*cd.rel, cd.a, cd.b, cd.ramified, v + 1);
  const Series s = Series::evaluate(A, le.x) + Series::evaluate(B, le.x) * le.y;
  return {v, s.coeff(v)};
}

}  // namespace

int valuation(const HyperellipticModel& model, const Poly& a, const Poly& b, const Place& p) {
  if (a.is_zero() && b.is_zero()) throw Error(ErrorCode::ZeroFunction, "valuation of zero");
  if (!p.rational()) {
    const HyperellipticModel big = model.base_change(2);
    const FieldEmbedding emb(model.field(), big.field());
    return valuation(big, a.map(emb), b.map(emb), lift_place(big, p, emb).front());
  }
  const ChartData cd = chart_data(model, p);
  const ChartPair cp = to_chart(model, p, a, b);
  return chart_pair_valuation(model, cd, cp.a, cp.b) + cp.offset;
}

int valuation(const HyperellipticModel& model, const FunctionRep& u, const Place& p) {
  if (u.is_zero()) throw Error(ErrorCode::ZeroFunction, "valuation of zero");
  const int num = valuation(model, u.a(), u.b(), p);
  const int den = p.at_infinity() ? -p.e * u.den().degree() : p.e * u.den().order_at(p.at_infinity() ? p.a : p.a);
  return num - den;
}

Fq value_at(const HyperellipticModel& model, const FunctionRep& u, const Place& p) {
  const GaloisField& F = model.field();
  if (u.is_zero()) return F.zero();
  const int v = valuation(model, u, p);
  if (v < 0) throw Error(ErrorCode::PoleAtPlace, "function has a pole at " + p.id());
  if (v > 0) return F.zero();
  const ChartData cd = chart_data(model, p);
  if (!p.at_infinity()) {
    const Fq d = u.den()(p.a);
    if (!d.is_zero()) return (u.a()(p.a) + u.b()(p.a) * p.y) / d;
    const auto [vn, lead] = leading_term(model, cd, u.a(), u.b());
    const LocalExpansion le = chart_expansion(*cd.rel, cd.a, cd.b, cd.ramified, vn + 1);
    return lead / Series::evaluate(u.den(), le.x).coeff(vn);
  }
  const ChartPair cp = to_chart(model, p, u.a(), u.b());
  const auto [vs, lead] = leading_term(model, cd, cp.a, cp.b);
  // u = X^{deg den - N} (A + B Y) / rev(den)(X), rev(den)(0) = 1
  const int shift = u.den().degree() + cp.offset / p.e;
  const LocalExpansion le = chart_expansion(*cd.rel, cd.a, cd.b, cd.ramified, p.e + 1);
  const Fq xlead = le.x.coeff(p.e);
  return lead * xlead.pow(shift);
}

int rational_fibre_degree(const HyperellipticModel& model, const Poly& xs, bool include_infinity) {
  int e = xs.degree() > 0 ? splitting_degree(xs) : 1;
  const HyperellipticModel big = model.base_change(e);
  const FieldEmbedding emb(model.field(), big.field());
  bool inert = false;
  if (xs.degree() > 0) {
    for (const auto& [a, mult] : roots_with_multiplicity(xs.map(emb))) {
      for (const auto& p : places_over(big, a)) inert = inert || !p.rational();
    }
  }
  if (include_infinity) {
    for (const auto& p : places_at_infinity(big)) inert = inert || !p.rational();
  }
  return inert ? 2 * e : e;
}

Divisor principal_divisor(const HyperellipticModel& model, const FunctionRep& u) {
  if (u.is_zero()) throw Error(ErrorCode::ZeroFunction, "divisor of zero");
  const Poly cand = u.den() * u.norm_numerator();
  int need = rational_fibre_degree(model, cand, false);
  const auto inf = places_at_infinity(model);
  if (!inf.front().rational() && valuation(model, u, inf.front()) != 0 && need % 2 == 1) need *= 2;
  if (need > 1) throw NeedsExtensionError(need, "support of div(" + u.to_string() + ") is not rational");
  Divisor d;
  if (cand.degree() > 0) {
    for (const auto& [a, mult] : roots_with_multiplicity(cand)) {
      for (const auto& p : places_over(model, a)) d.add(p, valuation(model, u, p));
    }
  }
  if (inf.front().rational()) {
    for (const auto& p : inf) d.add(p, valuation(model, u, p));
  }
  return d;
}

std::vector<Place> rational_points(const HyperellipticModel& model, int ext) {
  const HyperellipticModel big = model.base_change(ext);
  std::vector<Place> pts;
  for (const Fq a : big.field().elements()) {
    for (const auto& p : places_over(big, a)) {
      if (p.rational()) pts.push_back(p);
    }
  }
  for (const auto& p : places_at_infinity(big)) {
    if (p.rational()) pts.push_back(p);
  }
  return pts;
}

}  // namespace equicurve
