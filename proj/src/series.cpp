#include "equicurve/series.hpp"

#include <algorithm>

#include "equicurve/errors.hpp"

namespace equicurve {

Series::Series(const GaloisField& field, int precision)
    : field_(&field), coeffs_(static_cast<std::size_t>(std::max(precision, 0)), field.zero()) {}

Series::Series(const GaloisField& field, std::vector<Fq> coeffs, int precision)
    : field_(&field), coeffs_(std::move(coeffs)) {
  coeffs_.resize(static_cast<std::size_t>(std::max(precision, 0)), field.zero());
}

Series Series::from_poly(const Poly& p, int precision) {
  return Series(p.field(), p.coeffs(), precision);
}

Series Series::constant(Fq c, int precision) { return Series(c.field(), {c}, precision); }

Series Series::variable(const GaloisField& field, int precision) {
  return Series(field, {field.zero(), field.one()}, precision);
}

Fq Series::coeff(int i) const {
  if (i < 0 || i >= precision()) throw Error(ErrorCode::Internal, "series coefficient beyond precision");
  return coeffs_[static_cast<std::size_t>(i)];
}

std::optional<int> Series::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) return static_cast<int>(i);
  }
  return std::nullopt;
}

Series Series::truncate(int precision) const {
  std::vector<Fq> v(coeffs_.begin(),
                    coeffs_.begin() + std::min<std::ptrdiff_t>(precision, this->precision()));
  return Series(*field_, std::move(v), std::min(precision, this->precision()));
}

Series Series::inverse() const {
  if (coeffs_.empty() || coeffs_[0].is_zero()) {
    throw Error(ErrorCode::ZeroFunction, "series with vanishing constant term is not invertible");
  }
  const int n = precision();
  std::vector<Fq> r(static_cast<std::size_t>(n), field_->zero());
  const Fq c0inv = coeffs_[0].inverse();
  r[0] = c0inv;
  for (int k = 1; k < n; ++k) {
    Fq acc = field_->zero();
    for (int i = 1; i <= k; ++i) acc += coeffs_[static_cast<std::size_t>(i)] * r[static_cast<std::size_t>(k - i)];
    r[static_cast<std::size_t>(k)] = -acc * c0inv;
  }
  return Series(*field_, std::move(r), n);
}

Series Series::shift_down(int k) const {
  for (int i = 0; i < std::min(k, precision()); ++i) {
    if (!coeffs_[static_cast<std::size_t>(i)].is_zero()) {
      throw Error(ErrorCode::Internal, "shifting a series past a nonzero coefficient");
    }
  }
  if (k >= precision()) return Series(*field_, 0);
  return Series(*field_, std::vector<Fq>(coeffs_.begin() + k, coeffs_.end()), precision() - k);
}

Series Series::evaluate(const Poly& p, const Series& s) {
  Series acc(s.field(), s.precision());
  for (std::size_t i = p.coeffs().size(); i-- > 0;) {
    acc = acc * s;
    if (acc.precision() > 0) acc.coeffs_[0] += p.coeffs()[i];
  }
  return acc;
}

Series Series::operator-() const {
  Series r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Series& Series::operator+=(const Series& o) {
  const int n = std::min(precision(), o.precision());
  coeffs_.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) coeffs_[static_cast<std::size_t>(i)] += o.coeffs_[static_cast<std::size_t>(i)];
  return *this;
}

Series& Series::operator-=(const Series& o) {
  const int n = std::min(precision(), o.precision());
  coeffs_.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) coeffs_[static_cast<std::size_t>(i)] -= o.coeffs_[static_cast<std::size_t>(i)];
  return *this;
}

Series& Series::operator*=(Fq c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Series operator*(const Series& a, const Series& b) {
  const int n = std::min(a.precision(), b.precision());
  std::vector<Fq> r(static_cast<std::size_t>(n), a.field().zero());
  for (int i = 0; i < n; ++i) {
    const Fq ai = a.coeffs_[static_cast<std::size_t>(i)];
    if (ai.is_zero()) continue;
    for (int j = 0; i + j < n; ++j) r[static_cast<std::size_t>(i + j)] += ai * b.coeffs_[static_cast<std::size_t>(j)];
  }
  return Series(a.field(), std::move(r), n);
}

Series series_quadratic_root(const Series& h, const Series& s, Fq init) {
  const int n = std::min(h.precision(), s.precision());
  const GaloisField& F = s.field();
  if (n == 0) return Series(F, 0);
  const Fq h0 = h.coeff(0);
  if (!(init * init - h0 * init - s.coeff(0)).is_zero()) {
    throw Error(ErrorCode::NoSimpleRoot, "initial value is not a residue root");
  }
  const Fq deriv = init + init - h0;
  if (deriv.is_zero()) throw Error(ErrorCode::NoSimpleRoot, "residue root is not simple");
  const Fq dinv = deriv.inverse();
  // coefficient k of z^2 - h z - s is linear in z_k with slope deriv
  std::vector<Fq> z(static_cast<std::size_t>(n), F.zero());
  z[0] = init;
  for (int k = 1; k < n; ++k) {
    Fq acc = -s.coeff(k);
    for (int i = 1; i < k; ++i) acc += z[static_cast<std::size_t>(i)] * z[static_cast<std::size_t>(k - i)];
    for (int i = 1; i <= k; ++i) acc -= h.coeff(i) * z[static_cast<std::size_t>(k - i)];
    z[static_cast<std::size_t>(k)] = -acc * dinv;
  }
  return Series(F, std::move(z), n);
}

Series series_sqrt(const Series& s, Fq init) {
  if (s.field().p() == 2) throw Error(ErrorCode::WrongCharacteristic, "series square root in characteristic 2");
  return series_quadratic_root(Series(s.field(), s.precision()), s, init);
}

Series series_artin_schreier_root(const Series& h, const Series& s, Fq init) {
  if (s.field().p() != 2) throw Error(ErrorCode::WrongCharacteristic, "Artin-Schreier root outside characteristic 2");
  return series_quadratic_root(h, s, init);
}

}  // namespace equicurve
