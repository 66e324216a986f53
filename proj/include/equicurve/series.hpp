#pragma once

#include <optional>
#include <vector>

#include "equicurve/field.hpp"
#include "equicurve/poly.hpp"

namespace equicurve {

// Truncated power series sum c_i t^i known modulo t^precision.
class Series {
 public:
  Series(const GaloisField& field, int precision);
  Series(const GaloisField& field, std::vector<Fq> coeffs, int precision);

  static Series from_poly(const Poly& p, int precision);
  static Series constant(Fq c, int precision);
  static Series variable(const GaloisField& field, int precision);

  const GaloisField& field() const { return *field_; }
  int precision() const { return static_cast<int>(coeffs_.size()); }
  const std::vector<Fq>& coeffs() const { return coeffs_; }
  Fq coeff(int i) const;
  // Index of the first nonzero coefficient, or nullopt if every known coefficient is zero.
  std::optional<int> valuation() const;

  Series truncate(int precision) const;
  Series inverse() const;
  // Divides by t^k; the first k coefficients must vanish.
  Series shift_down(int k) const;
  // p(s) for a polynomial p.
  static Series evaluate(const Poly& p, const Series& s);

  Series operator-() const;
  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  Series& operator*=(Fq c);
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(Series a, Fq c) { return a *= c; }
  friend Series operator*(const Series& a, const Series& b);
  friend bool operator==(const Series& a, const Series& b) { return a.coeffs_ == b.coeffs_; }

 private:
  const GaloisField* field_;
  std::vector<Fq> coeffs_;
};

// Root z of z^2 - h z = s with z(0) = init, where init is a simple root of the residue equation.
Series series_quadratic_root(const Series& h, const Series& s, Fq init);
// Square root of s with constant term init (odd characteristic).
Series series_sqrt(const Series& s, Fq init);
// Root of z^2 - h z = s in characteristic 2; h(0) must be nonzero.
Series series_artin_schreier_root(const Series& h, const Series& s, Fq init);

}  // namespace equicurve
