#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace equicurve {

inline constexpr std::uint64_t kDefaultMaxFieldSize = std::uint64_t{1} << 20;

// Process-wide bound on field sizes; a max_q argument of 0 means this bound.
std::uint64_t field_size_limit();
void set_field_size_limit(std::uint64_t max_q);

class GaloisField;

// Element of GF(p^k). The value is the base-p digit encoding sum c_i p^i of the
// residue polynomial sum c_i t^i modulo the field's canonical modulus.
class Fq {
 public:
  Fq() = default;
  Fq(const GaloisField* field, std::uint32_t value) : field_(field), value_(value) {}

  const GaloisField& field() const { return *field_; }
  const GaloisField* field_ptr() const { return field_; }
  std::uint32_t value() const { return value_; }
  bool is_zero() const { return value_ == 0; }
  bool is_one() const;

  // Residue polynomial coefficients, ascending, exactly k entries.
  std::vector<std::uint32_t> coeffs() const;

  Fq operator-() const;
  Fq inverse() const;
  Fq pow(std::int64_t e) const;

  Fq& operator+=(Fq o);
  Fq& operator-=(Fq o);
  Fq& operator*=(Fq o);
  Fq& operator/=(Fq o);

  friend Fq operator+(Fq a, Fq b) { return a += b; }
  friend Fq operator-(Fq a, Fq b) { return a -= b; }
  friend Fq operator*(Fq a, Fq b) { return a *= b; }
  friend Fq operator/(Fq a, Fq b) { return a /= b; }

  friend bool operator==(Fq a, Fq b) { return a.value_ == b.value_ && a.field_ == b.field_; }
  friend std::strong_ordering operator<=>(Fq a, Fq b) { return a.value_ <=> b.value_; }

 private:
  const GaloisField* field_ = nullptr;
  std::uint32_t value_ = 0;
};

// A finite field GF(p^k) with its canonical modulus. Instances are interned:
// make() returns the same object for the same (p, k), and it lives for the
// rest of the program.
class GaloisField {
 public:
  static const GaloisField& make(std::uint64_t p, std::uint64_t k,
                                 std::uint64_t max_q = 0);

  GaloisField(const GaloisField&) = delete;
  GaloisField& operator=(const GaloisField&) = delete;

  std::uint32_t p() const { return p_; }
  std::uint32_t k() const { return k_; }
  std::uint32_t q() const { return q_; }
  // Monic modulus, ascending coefficients, length k+1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  std::string name() const;

  Fq zero() const { return Fq(this, 0); }
  Fq one() const { return Fq(this, 1); }
  Fq element(std::uint64_t encoding) const;
  Fq from_int(std::int64_t n) const;
  Fq from_coeffs(const std::vector<std::uint32_t>& coeffs) const;
  Fq primitive() const { return Fq(this, exp_[1 % (q_ - 1)]); }
  std::vector<Fq> elements() const;

  std::vector<std::uint32_t> digits(std::uint32_t v) const;
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const;

  bool is_square(Fq a) const;
  std::optional<Fq> sqrt(Fq a) const;
  // Roots of z^2 + b z + c in this field, ascending by encoding, without repetition.
  std::vector<Fq> quadratic_roots(Fq b, Fq c) const;

 private:
  GaloisField(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus);

  std::uint32_t p_;
  std::uint32_t k_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> pow_p_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
  // characteristic 2 only: as_root_[d] is the least w with w^2 + w = d, or q if none
  std::vector<std::uint32_t> as_root_;
};

bool is_prime(std::uint64_t n);

// Lexicographically least monic irreducible polynomial of degree k over GF(p),
// comparing ascending coefficient vectors. For k = 1 this is x.
std::vector<std::uint32_t> canonical_modulus(std::uint32_t p, std::uint32_t k);

// Irreducibility over GF(p) of a polynomial with ascending coefficients.
bool is_irreducible_mod_p(const std::vector<std::uint32_t>& poly, std::uint32_t p);

// field_make(p, k)
inline const GaloisField& field_make(std::uint64_t p, std::uint64_t k,
                                     std::uint64_t max_q = 0) {
  return GaloisField::make(p, k, max_q);
}

// Embedding GF(p^k) -> GF(p^{k e}) sending the generator of the small field to
// the least root of its modulus in the big field.
class FieldEmbedding {
 public:
  FieldEmbedding(const GaloisField& from, const GaloisField& to);

  const GaloisField& from() const { return *from_; }
  const GaloisField& to() const { return *to_; }
  Fq operator()(Fq a) const { return Fq(to_, table_[a.value()]); }
  bool is_identity() const { return from_ == to_; }

 private:
  const GaloisField* from_;
  const GaloisField* to_;
  std::vector<std::uint32_t> table_;
};

}  // namespace equicurve
