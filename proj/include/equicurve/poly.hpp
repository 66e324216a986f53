#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "equicurve/field.hpp"

namespace equicurve {

// Dense univariate polynomial over GF(q); coefficients ascending, no trailing zeros.
class Poly {
 public:
  explicit Poly(const GaloisField& field) : field_(&field) {}
  Poly(const GaloisField& field, std::vector<Fq> coeffs);

  static Poly constant(Fq c);
  static Poly x(const GaloisField& field);
  static Poly monomial(Fq c, int degree);
  static Poly linear_root(Fq a);  // x - a
  static Poly from_ints(const GaloisField& field, const std::vector<std::int64_t>& coeffs);

  const GaloisField& field() const { return *field_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<Fq>& coeffs() const { return coeffs_; }
  Fq coeff(int i) const;
  Fq lc() const;

  Fq operator()(Fq x) const;
  Poly derivative() const;
  Poly monic() const;
  Poly pow(unsigned e) const;
  Poly compose(const Poly& inner) const;
  Poly taylor_shift(Fq a) const;
  // x^n f(1/x); requires n >= degree
  Poly reversed(int n) const;
  // multiplicity of the root a; a large sentinel for the zero polynomial
  int order_at(Fq a) const;
  Poly map(const FieldEmbedding& emb) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(Fq c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, Fq c) { return a *= c; }
  friend Poly operator*(Fq c, Poly a) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(const std::string& var = "x") const;
  std::vector<std::uint32_t> encodings() const;

 private:
  void normalize();

  const GaloisField* field_;
  std::vector<Fq> coeffs_;
};

inline constexpr int kInfiniteOrder = 1 << 28;

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
inline Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
inline Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }
// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
Poly powmod(Poly base, std::uint64_t e, const Poly& mod);

// True iff gcd(f, f') is a unit. Throws ZeroPolynomial for f = 0.
bool poly_squarefree(const Poly& f);

// Roots in the coefficient field with multiplicities, ascending by encoding.
std::vector<std::pair<Fq, int>> roots_with_multiplicity(const Poly& f);

// Smallest e such that every root of f lies in GF(q^e).
int splitting_degree(const Poly& f, std::uint64_t max_q = 0);

}  // namespace equicurve
