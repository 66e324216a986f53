#pragma once

#include <string>
#include <vector>

#include "equicurve/curve.hpp"

namespace equicurve {

// Automorphism acting on functions by x -> alpha x + beta, y -> lambda y + c(x).
class CurveAutomorphism {
 public:
  CurveAutomorphism(Fq alpha, Fq beta, Fq lambda, Poly c);

  static CurveAutomorphism identity(const HyperellipticModel& model);
  static CurveAutomorphism hyperelliptic_involution(const HyperellipticModel& model);
  static CurveAutomorphism diagonal(Fq alpha, Fq beta, Fq lambda);

  Fq alpha() const { return alpha_; }
  Fq beta() const { return beta_; }
  Fq lambda() const { return lambda_; }
  const Poly& c() const { return c_; }

  bool is_identity() const;
  bool fixes_x() const { return alpha_.is_one() && beta_.is_zero(); }
  CurveAutomorphism map(const FieldEmbedding& emb) const;
  std::string to_string() const;

  friend bool operator==(const CurveAutomorphism& a, const CurveAutomorphism& b) { return a.key() == b.key(); }
  friend bool operator<(const CurveAutomorphism& a, const CurveAutomorphism& b) { return a.key() < b.key(); }

 private:
  std::vector<std::uint32_t> key() const;

  Fq alpha_;
  Fq beta_;
  Fq lambda_;
  Poly c_;
};

// Throws InvalidAutomorphism unless phi preserves the curve equation.
void check_automorphism(const HyperellipticModel& model, const CurveAutomorphism& phi);
// The automorphism whose action on functions is u -> a(b(u)).
CurveAutomorphism compose(const CurveAutomorphism& a, const CurveAutomorphism& b);
int element_order(const HyperellipticModel& model, const CurveAutomorphism& phi);

FunctionRep apply_automorphism(const HyperellipticModel& model, const CurveAutomorphism& phi, const FunctionRep& u);
// The place P' with u(P') = phi(u)(P) for all functions u.
Place place_image(const HyperellipticModel& model, const CurveAutomorphism& phi, const Place& p);
Divisor divisor_image(const HyperellipticModel& model, const CurveAutomorphism& phi, const Divisor& d);
bool divisor_invariant(const HyperellipticModel& model, const std::vector<CurveAutomorphism>& group, const Divisor& d);

// All elements generated by the given automorphisms, identity first, then sorted.
std::vector<CurveAutomorphism> generate_group(const HyperellipticModel& model,
                                              const std::vector<CurveAutomorphism>& generators,
                                              std::size_t max_order = 4096);
// Throws NotAGroup unless the list is closed under composition and contains the identity,
// and NotFaithful if it repeats an element.
void check_group(const HyperellipticModel& model, const std::vector<CurveAutomorphism>& group);

}  // namespace equicurve
