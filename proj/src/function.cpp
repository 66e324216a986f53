#include "equicurve/function.hpp"

#include "equicurve/errors.hpp"

namespace equicurve {

FunctionRep::FunctionRep(std::shared_ptr<const CurveRelation> rel, Poly a, Poly b, Poly den)
    : rel_(std::move(rel)), a_(std::move(a)), b_(std::move(b)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "function with zero denominator");
  normalize();
}

FunctionRep::FunctionRep(std::shared_ptr<const CurveRelation> rel, Poly a, Poly b)
    : FunctionRep(rel, std::move(a), std::move(b), Poly::constant(rel->f.field().one())) {}

FunctionRep FunctionRep::constant(std::shared_ptr<const CurveRelation> rel, Fq c) {
  const GaloisField& F = rel->f.field();
  return FunctionRep(rel, Poly::constant(c), Poly(F));
}

FunctionRep FunctionRep::x(std::shared_ptr<const CurveRelation> rel) {
  const GaloisField& F = rel->f.field();
  return FunctionRep(rel, Poly::x(F), Poly(F));
}

FunctionRep FunctionRep::y(std::shared_ptr<const CurveRelation> rel) {
  const GaloisField& F = rel->f.field();
  return FunctionRep(rel, Poly(F), Poly::constant(F.one()));
}

void FunctionRep::normalize() {
  const GaloisField& F = den_.field();
  if (is_zero()) {
    den_ = Poly::constant(F.one());
    return;
  }
  const Poly g = gcd(gcd(a_, b_), den_);
  if (g.degree() > 0) {
    a_ = a_ / g;
    b_ = b_ / g;
    den_ = den_ / g;
  }
  const Fq lc_inv = den_.lc().inverse();
  a_ *= lc_inv;
  b_ *= lc_inv;
  den_ *= lc_inv;
}

Poly FunctionRep::norm_numerator() const {
  return a_ * a_ + a_ * b_ * rel_->h - b_ * b_ * rel_->f;
}

FunctionRep FunctionRep::inverse() const {
  if (is_zero()) throw Error(ErrorCode::ZeroFunction, "inverse of the zero function");
  // (a + b y)^{-1} = ((a + b h) - b y) / N
  const Poly n = norm_numerator();
  return FunctionRep(rel_, den_ * (a_ + b_ * rel_->h), -(den_ * b_), n);
}

FunctionRep FunctionRep::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  FunctionRep result = constant(rel_, field().one());
  FunctionRep base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

FunctionRep FunctionRep::operator-() const { return FunctionRep(rel_, -a_, -b_, den_); }

FunctionRep operator+(const FunctionRep& u, const FunctionRep& v) {
  if (u.den_ == v.den_) return FunctionRep(u.rel_, u.a_ + v.a_, u.b_ + v.b_, u.den_);
  return FunctionRep(u.rel_, u.a_ * v.den_ + v.a_ * u.den_, u.b_ * v.den_ + v.b_ * u.den_, u.den_ * v.den_);
}

FunctionRep operator-(const FunctionRep& u, const FunctionRep& v) { return u + (-v); }

FunctionRep operator*(const FunctionRep& u, const FunctionRep& v) {
  const CurveRelation& rel = *u.rel_;
  const Poly bb = u.b_ * v.b_;
  Poly a = u.a_ * v.a_ + bb * rel.f;
  Poly b = u.a_ * v.b_ + v.a_ * u.b_ + bb * rel.h;
  return FunctionRep(u.rel_, std::move(a), std::move(b), u.den_ * v.den_);
}

FunctionRep operator*(const FunctionRep& u, Fq c) { return FunctionRep(u.rel_, u.a_ * c, u.b_ * c, u.den_); }

std::string FunctionRep::to_string() const {
  std::string num;
  if (b_.is_zero()) {
    num = a_.to_string();
  } else if (a_.is_zero()) {
    num = b_.degree() == 0 && b_.lc().is_one() ? "y" : "(" + b_.to_string() + ")*y";
  } else {
    num = a_.to_string() + "+" + (b_.degree() == 0 && b_.lc().is_one() ? "y" : "(" + b_.to_string() + ")*y");
  }
  if (den_.degree() == 0) return num;
  return "(" + num + ")/(" + den_.to_string() + ")";
}

}  // namespace equicurve
