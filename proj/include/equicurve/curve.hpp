#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "equicurve/function.hpp"
#include "equicurve/poly.hpp"
#include "equicurve/series.hpp"

namespace equicurve {

// Smooth projective model of y^2 - h(x) y = f(x). In odd characteristic h = 0.
// The chart at infinity is Y^2 - H(X) Y = F(X) with X = 1/x, Y = y / x^{g+1}.
class HyperellipticModel {
 public:
  HyperellipticModel(Poly h, Poly f);
  static HyperellipticModel odd(Poly f);

  const GaloisField& field() const { return rel_->f.field(); }
  bool char2() const { return field().p() == 2; }
  const Poly& h() const { return rel_->h; }
  const Poly& f() const { return rel_->f; }
  int genus() const { return genus_; }
  const std::shared_ptr<const CurveRelation>& relation() const { return rel_; }
  const CurveRelation& chart() const { return *chart_; }

  FunctionRep x() const { return FunctionRep::x(rel_); }
  FunctionRep y() const { return FunctionRep::y(rel_); }
  FunctionRep constant(Fq c) const { return FunctionRep::constant(rel_, c); }
  FunctionRep function(Poly a, Poly b, Poly den) const;
  FunctionRep function(Poly a, Poly b) const;

  // Same curve over a larger field containing this one.
  HyperellipticModel base_change(const GaloisField& big) const;
  HyperellipticModel base_change(int degree) const;

  friend bool operator==(const HyperellipticModel& a, const HyperellipticModel& b) {
    return &a.field() == &b.field() && a.h() == b.h() && a.f() == b.f();
  }

 private:
  std::shared_ptr<const CurveRelation> rel_;
  std::shared_ptr<const CurveRelation> chart_;
  int genus_;
};

// Genus of the smooth model; throws WrongCharacteristic or NotSmooth. May return g < 2.
int model_genus(const Poly& h, const Poly& f);
// Genus of a valid model; throws GenusTooSmall when g < 2.
int curve_validate(const HyperellipticModel& model);

enum class PlaceKind { FiniteRamified, FiniteSplit, FiniteInert, InfiniteRamified, InfiniteSplit, InfiniteInert };

// A place of the curve. For finite places a is the x-coordinate and y the y-coordinate;
// at infinity y holds the chart coordinate Y. Inert places have degree 2 and no coordinates.
struct Place {
  PlaceKind kind;
  Fq a;
  Fq y;
  int degree = 1;
  int e = 1;
  int branch = 0;  // +1 / -1 for the two places at infinity when split

  bool at_infinity() const {
    return kind == PlaceKind::InfiniteRamified || kind == PlaceKind::InfiniteSplit ||
           kind == PlaceKind::InfiniteInert;
  }
  bool ramified() const { return kind == PlaceKind::FiniteRamified || kind == PlaceKind::InfiniteRamified; }
  bool rational() const { return degree == 1; }
  std::string id() const;

  friend bool operator==(const Place& p, const Place& q) { return p.key() == q.key(); }
  friend bool operator<(const Place& p, const Place& q) { return p.key() < q.key(); }

 private:
  std::tuple<int, std::uint32_t, int, std::uint32_t> key() const;
};

std::vector<Place> places_over(const HyperellipticModel& model, Fq a);
std::vector<Place> places_at_infinity(const HyperellipticModel& model);
Place place_from_id(const HyperellipticModel& model, const std::string& id);
// Places of the base-changed model lying over a place of the original model.
std::vector<Place> lift_place(const HyperellipticModel& big, const Place& p, const FieldEmbedding& emb);

// Finite formal sum of places.
class Divisor {
 public:
  Divisor() = default;

  void add(const Place& p, int n);
  int coeff(const Place& p) const;
  int degree() const;
  bool is_zero() const { return coeffs_.empty(); }
  bool is_effective() const;
  const std::map<Place, int>& entries() const { return coeffs_; }

  Divisor& operator+=(const Divisor& o);
  Divisor& operator-=(const Divisor& o);
  friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
  friend Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }
  friend Divisor operator*(int k, const Divisor& d);
  friend bool operator==(const Divisor& a, const Divisor& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string() const;

 private:
  std::map<Place, int> coeffs_;
};

Divisor lift_divisor(const HyperellipticModel& big, const Divisor& d, const FieldEmbedding& emb);
// x^*(a) and x^*(infinity); both require the fibre to be rational.
Divisor fibre_divisor(const HyperellipticModel& model, Fq a);
Divisor infinity_divisor(const HyperellipticModel& model);

// Local coordinates x(t), y(t) at a rational place of a chart.
struct LocalExpansion {
  Series x;
  Series y;
};
LocalExpansion chart_expansion(const CurveRelation& rel, Fq a, Fq b, bool ramified, int precision);

// Expansion data of a + b y at a rational place: a + b y = x^{shift_power} (A + B Y) on the relevant chart.
struct ChartData {
  const CurveRelation* rel;
  Fq a;
  Fq b;
  bool ramified;
  int e;
};
ChartData chart_data(const HyperellipticModel& model, const Place& p);

int default_precision(const HyperellipticModel& model);
int precision_cap(const HyperellipticModel& model);

int valuation(const HyperellipticModel& model, const FunctionRep& u, const Place& p);
// Valuation of a(x) + b(x) y.
int valuation(const HyperellipticModel& model, const Poly& a, const Poly& b, const Place& p);
Fq value_at(const HyperellipticModel& model, const FunctionRep& u, const Place& p);
Divisor principal_divisor(const HyperellipticModel& model, const FunctionRep& u);

// Degree-1 places over GF(q^ext), sorted by (x, y) encoding with points at infinity last.
std::vector<Place> rational_points(const HyperellipticModel& model, int ext = 1);

// Smallest extension degree over which all places above the given finite x-values and
// infinity are rational.
int rational_fibre_degree(const HyperellipticModel& model, const Poly& xs, bool include_infinity);

}  // namespace equicurve
