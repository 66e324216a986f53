#pragma once

#include <memory>
#include <string>

#include "equicurve/poly.hpp"

namespace equicurve {

// The relation y^2 = h(x) y + f(x) defining a function field k(x, y).
struct CurveRelation {
  Poly h;
  Poly f;
};

// Element (a(x) + b(x) y) / den(x) of k(x, y); den is monic and gcd(a, b, den) = 1.
class FunctionRep {
 public:
  FunctionRep(std::shared_ptr<const CurveRelation> rel, Poly a, Poly b, Poly den);
  FunctionRep(std::shared_ptr<const CurveRelation> rel, Poly a, Poly b);

  static FunctionRep constant(std::shared_ptr<const CurveRelation> rel, Fq c);
  static FunctionRep x(std::shared_ptr<const CurveRelation> rel);
  static FunctionRep y(std::shared_ptr<const CurveRelation> rel);

  const Poly& a() const { return a_; }
  const Poly& b() const { return b_; }
  const Poly& den() const { return den_; }
  const CurveRelation& relation() const { return *rel_; }
  const std::shared_ptr<const CurveRelation>& relation_ptr() const { return rel_; }
  const GaloisField& field() const { return a_.field(); }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  // Numerator norm a^2 + a b h - b^2 f.
  Poly norm_numerator() const;
  FunctionRep inverse() const;
  FunctionRep pow(int e) const;

  FunctionRep operator-() const;
  friend FunctionRep operator+(const FunctionRep& u, const FunctionRep& v);
  friend FunctionRep operator-(const FunctionRep& u, const FunctionRep& v);
  friend FunctionRep operator*(const FunctionRep& u, const FunctionRep& v);
  friend FunctionRep operator/(const FunctionRep& u, const FunctionRep& v) { return u * v.inverse(); }
  friend FunctionRep operator*(const FunctionRep& u, Fq c);
  friend bool operator==(const FunctionRep& u, const FunctionRep& v) {
    return u.a_ == v.a_ && u.b_ == v.b_ && u.den_ == v.den_;
  }

  std::string to_string() const;

 private:
  void normalize();

  std::shared_ptr<const CurveRelation> rel_;
  Poly a_;
  Poly b_;
  Poly den_;
};

}  // namespace equicurve
