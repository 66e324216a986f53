#include "equicurve/automorphism.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "equicurve/errors.hpp"

namespace equicurve {

CurveAutomorphism::CurveAutomorphism(Fq alpha, Fq beta, Fq lambda, Poly c)
    : alpha_(alpha), beta_(beta), lambda_(lambda), c_(std::move(c)) {
  if (alpha_.is_zero() || lambda_.is_zero()) {
    throw Error(ErrorCode::InvalidAutomorphism, "alpha and lambda must be nonzero");
  }
}

CurveAutomorphism CurveAutomorphism::identity(const HyperellipticModel& model) {
  const GaloisField& F = model.field();
  return CurveAutomorphism(F.one(), F.zero(), F.one(), Poly(F));
}

CurveAutomorphism CurveAutomorphism::hyperelliptic_involution(const HyperellipticModel& model) {
  const GaloisField& F = model.field();
  if (model.char2()) return CurveAutomorphism(F.one(), F.zero(), F.one(), model.h());
  return CurveAutomorphism(F.one(), F.zero(), -F.one(), Poly(F));
}

CurveAutomorphism CurveAutomorphism::diagonal(Fq alpha, Fq beta, Fq lambda) {
  return CurveAutomorphism(alpha, beta, lambda, Poly(alpha.field()));
}

bool CurveAutomorphism::is_identity() const { return fixes_x() && lambda_.is_one() && c_.is_zero(); }

CurveAutomorphism CurveAutomorphism::map(const FieldEmbedding& emb) const {
  return CurveAutomorphism(emb(alpha_), emb(beta_), emb(lambda_), c_.map(emb));
}

std::vector<std::uint32_t> CurveAutomorphism::key() const {
  std::vector<std::uint32_t> k{alpha_.value(), beta_.value(), lambda_.value()};
  for (auto e : c_.encodings()) k.push_back(e);
  return k;
}

std::string CurveAutomorphism::to_string() const {
  std::ostringstream os;
  os << "x -> " << Poly(alpha_.field(), {beta_, alpha_}).to_string() << ", y -> " << lambda_.value() << "*y";
  if (!c_.is_zero()) os << "+" << c_.to_string();
  return os.str();
}

FunctionRep apply_automorphism(const HyperellipticModel& model, const CurveAutomorphism& phi, const FunctionRep& u) {
  const GaloisField& F = model.field();
  const Poly lin(F, {phi.beta(), phi.alpha()});
  const Poly a = u.a().compose(lin);
  const Poly b = u.b().compose(lin);
  const Poly den = u.den().compose(lin);
  return model.function(a + b * phi.c(), b * phi.lambda(), den);
}

void check_automorphism(const HyperellipticModel& model, const CurveAutomorphism& phi) {
  if (&phi.alpha().field() != &model.field()) {
    throw Error(ErrorCode::InvalidAutomorphism, "automorphism over a different field");
  }
  const FunctionRep y = apply_automorphism(model, phi, model.y());
  const FunctionRep h = apply_automorphism(model, phi, model.function(model.h(), Poly(model.field())));
  const FunctionRep f = apply_automorphism(model, phi, model.function(model.f(), Poly(model.field())));
  if (!(y * y - h * y - f).is_zero()) {
    throw Error(ErrorCode::InvalidAutomorphism, phi.to_string() + " does not preserve the curve equation");
  }
}

CurveAutomorphism compose(const CurveAutomorphism& a, const CurveAutomorphism& b) {
  const GaloisField& F = a.alpha().field();
  const Poly lin(F, {a.beta(), a.alpha()});
  return CurveAutomorphism(a.alpha() * b.alpha(), b.alpha() * a.beta() + b.beta(), a.lambda() * b.lambda(),
                           a.c() * b.lambda() + b.c().compose(lin));
}

int element_order(const HyperellipticModel& model, const CurveAutomorphism& phi) {
  CurveAutomorphism cur = phi;
  for (int k = 1; k <= 100000; ++k) {
    if (cur.is_identity()) return k;
    cur = compose(cur, phi);
  }
  (void)model;
  throw Error(ErrorCode::NotAGroup, "automorphism of unbounded order");
}

Place place_image(const HyperellipticModel& model, const CurveAutomorphism& phi, const Place& p) {
  const GaloisField& F = model.field();
  if (p.at_infinity()) {
    const auto inf = places_at_infinity(model);
    if (!p.rational() || p.ramified()) return inf.front();
    const int g = model.genus();
    const Fq w = (phi.lambda() * p.y + phi.c().coeff(g + 1)) / phi.alpha().pow(g + 1);
    for (const auto& q : inf) {
      if (q.y == w) return q;
    }
    throw Error(ErrorCode::InvalidAutomorphism, "image of " + p.id() + " is not a place");
  }
  const Fq a = phi.alpha() * p.a + phi.beta();
  const auto fib = places_over(model, a);
  if (!p.rational() || p.ramified()) return fib.front();
  const Fq b = phi.lambda() * p.y + phi.c()(p.a);
  for (const auto& q : fib) {
    if (q.y == b) return q;
  }
  (void)F;
  throw Error(ErrorCode::InvalidAutomorphism, "image of " + p.id() + " is not a place");
}

Divisor divisor_image(const HyperellipticModel& model, const CurveAutomorphism& phi, const Divisor& d) {
  Divisor r;
  for (const auto& [p, n] : d.entries()) r.add(place_image(model, phi, p), n);
  return r;
}

bool divisor_invariant(const HyperellipticModel& model, const std::vector<CurveAutomorphism>& group, const Divisor& d) {
  return std::all_of(group.begin(), group.end(),
                     [&](const CurveAutomorphism& g) { return divisor_image(model, g, d) == d; });
}

std::vector<CurveAutomorphism> generate_group(const HyperellipticModel& model,
                                              const std::vector<CurveAutomorphism>& generators,
                                              std::size_t max_order) {
  for (const auto& g : generators) check_automorphism(model, g);
  const CurveAutomorphism id = CurveAutomorphism::identity(model);
  std::set<CurveAutomorphism> seen{id};
  std::deque<CurveAutomorphism> queue{id};
  while (!queue.empty()) {
    const CurveAutomorphism cur = queue.front();
    queue.pop_front();
    for (const auto& g : generators) {
      CurveAutomorphism next = compose(cur, g);
      if (seen.insert(next).second) {
        if (seen.size() > max_order) throw Error(ErrorCode::NotAGroup, "generated group exceeds the order bound");
        queue.push_back(std::move(next));
      }
    }
  }
  std::vector<CurveAutomorphism> out{id};
  for (const auto& g : seen) {
    if (!g.is_identity()) out.push_back(g);
  }
  return out;
}

void check_group(const HyperellipticModel& model, const std::vector<CurveAutomorphism>& group) {
  std::set<CurveAutomorphism> s;
  for (const auto& g : group) {
    check_automorphism(model, g);
    if (!s.insert(g).second) throw Error(ErrorCode::NotFaithful, "group lists " + g.to_string() + " twice");
  }
  if (!s.count(CurveAutomorphism::identity(model))) throw Error(ErrorCode::NotAGroup, "identity missing");
  for (const auto& a : group) {
    for (const auto& b : group) {
      if (!s.count(compose(a, b))) throw Error(ErrorCode::NotAGroup, "not closed under composition");
    }
  }
}

}  // namespace equicurve
