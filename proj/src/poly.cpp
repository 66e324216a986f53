#include "equicurve/poly.hpp"

#include <algorithm>
#include <sstream>

#include "equicurve/errors.hpp"

namespace equicurve {

Poly::Poly(const GaloisField& field, std::vector<Fq> coeffs)
    : field_(&field), coeffs_(std::move(coeffs)) {
  normalize();
}

void Poly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::constant(Fq c) { return Poly(c.field(), {c}); }

Poly Poly::x(const GaloisField& field) { return Poly(field, {field.zero(), field.one()}); }

Poly Poly::monomial(Fq c, int degree) {
  std::vector<Fq> v(static_cast<std::size_t>(degree) + 1, c.field().zero());
  v.back() = c;
  return Poly(c.field(), std::move(v));
}

Poly Poly::linear_root(Fq a) { return Poly(a.field(), {-a, a.field().one()}); }

Poly Poly::from_ints(const GaloisField& field, const std::vector<std::int64_t>& coeffs) {
  std::vector<Fq> v;
  v.reserve(coeffs.size());
  for (auto c : coeffs) v.push_back(field.from_int(c));
  return Poly(field, std::move(v));
}

Fq Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return field_->zero();
  return coeffs_[static_cast<std::size_t>(i)];
}

Fq Poly::lc() const { return coeffs_.empty() ? field_->zero() : coeffs_.back(); }

Fq Poly::operator()(Fq x) const {
  Fq acc = field_->zero();
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

Poly Poly::derivative() const {
  std::vector<Fq> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    d.push_back(coeffs_[i] * field_->from_int(static_cast<std::int64_t>(i)));
  }
  return Poly(*field_, std::move(d));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * lc().inverse();
}

Poly Poly::pow(unsigned e) const {
  Poly result = constant(field_->one());
  Poly base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

Poly Poly::compose(const Poly& inner) const {
  Poly acc(*field_);
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc *= inner;
    acc += constant(coeffs_[i]);
  }
  return acc;
}

Poly Poly::taylor_shift(Fq a) const { return compose(Poly(*field_, {a, field_->one()})); }

Poly Poly::reversed(int n) const {
  if (n < degree()) throw Error(ErrorCode::Internal, "reversal degree below polynomial degree");
  std::vector<Fq> v(static_cast<std::size_t>(n) + 1, field_->zero());
  for (int i = 0; i <= degree(); ++i) v[static_cast<std::size_t>(n - i)] = coeffs_[i];
  return Poly(*field_, std::move(v));
}

int Poly::order_at(Fq a) const {
  if (is_zero()) return kInfiniteOrder;
  const Poly shifted = taylor_shift(a);
  int k = 0;
  while (shifted.coeffs_[static_cast<std::size_t>(k)].is_zero()) ++k;
  return k;
}

Poly Poly::map(const FieldEmbedding& emb) const {
  std::vector<Fq> v;
  v.reserve(coeffs_.size());
  for (auto c : coeffs_) v.push_back(emb(c));
  return Poly(emb.to(), std::move(v));
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), field_->zero());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), field_->zero());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Fq> r(coeffs_.size() + o.coeffs_.size() - 1, field_->zero());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(r);
  normalize();
  return *this;
}

Poly& Poly::operator*=(Fq c) {
  for (auto& x : coeffs_) x *= c;
  normalize();
  return *this;
}

std::string Poly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Fq c = coeffs_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0) {
      os << c.value();
      continue;
    }
    if (!c.is_one()) os << c.value() << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

std::vector<std::uint32_t> Poly::encodings() const {
  std::vector<std::uint32_t> v;
  v.reserve(coeffs_.size());
  for (auto c : coeffs_) v.push_back(c.value());
  return v;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "division by the zero polynomial");
  const GaloisField& F = a.field();
  if (a.degree() < b.degree()) return {Poly(F), a};
  std::vector<Fq> rem = a.coeffs();
  std::vector<Fq> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1, F.zero());
  const Fq lc_inv = b.lc().inverse();
  const auto& bc = b.coeffs();
  for (int i = a.degree() - b.degree(); i >= 0; --i) {
    const Fq factor = rem[static_cast<std::size_t>(i + b.degree())] * lc_inv;
    quo[static_cast<std::size_t>(i)] = factor;
    if (factor.is_zero()) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) rem[static_cast<std::size_t>(i) + j] -= factor * bc[j];
  }
  return {Poly(F, std::move(quo)), Poly(F, std::move(rem))};
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Poly powmod(Poly base, std::uint64_t e, const Poly& mod) {
  Poly result = Poly::constant(mod.field().one()) % mod;
  base = base % mod;
  while (e) {
    if (e & 1) result = (result * base) % mod;
    e >>= 1;
    if (e) base = (base * base) % mod;
  }
  return result;
}

bool poly_squarefree(const Poly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "squarefree test of the zero polynomial");
  return gcd(f, f.derivative()).degree() == 0;
}

std::vector<std::pair<Fq, int>> roots_with_multiplicity(const Poly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "roots of the zero polynomial");
  std::vector<std::pair<Fq, int>> out;
  if (f.degree() == 0) return out;
  const GaloisField& F = f.field();
  // restrict the search to the distinct roots in GF(q)
  const Poly x = Poly::x(F);
  const Poly frob = powmod(x, F.q(), f);
  const Poly g = gcd(f, frob - x);
  if (g.degree() <= 0) return out;
  for (const Fq a : F.elements()) {
    if (g(a).is_zero()) {
      out.emplace_back(a, f.order_at(a));
      if (static_cast<int>(out.size()) == g.degree()) break;
    }
  }
  return out;
}

int splitting_degree(const Poly& f, std::uint64_t max_q) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "splitting degree of the zero polynomial");
  if (f.degree() <= 0) return 1;
  const GaloisField& F = f.field();
  if (max_q == 0) max_q = field_size_limit();
  const Poly x = Poly::x(F);
  Poly frob = x % f;
  std::uint64_t size = 1;
  for (int e = 1;; ++e) {
    size *= F.q();
    if (size > max_q) {
      throw Error(ErrorCode::BoundExceeded,
                  "splitting field of " + f.to_string() + " over " + F.name() + " exceeds the field bound");
    }
    frob = powmod(frob, F.q(), f);
    const Poly g = gcd(f, frob - x);
    if (powmod(g, static_cast<std::uint64_t>(f.degree()), f).is_zero()) return e;
  }
}

}  // namespace equicurve
