#include "equicurve/field.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <utility>

#include "equicurve/errors.hpp"

namespace equicurve {

namespace {

using RawPoly = std::vector<std::uint32_t>;

void trim(RawPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // p prime, a != 0
  std::uint64_t result = 1, base = a % p, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

RawPoly raw_mod(RawPoly a, const RawPoly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t lc_inv = inv_mod(m.back(), p);
  while (a.size() > dm && !a.empty()) {
    const std::size_t shift = a.size() - 1 - dm;
    const std::uint64_t factor = a.back() * lc_inv % p;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - factor) * m[i]) % p);
    }
    trim(a);
  }
  return a;
}

RawPoly raw_mul(const RawPoly& a, const RawPoly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  RawPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
  }
  trim(r);
  return r;
}

RawPoly raw_mulmod(const RawPoly& a, const RawPoly& b, const RawPoly& m, std::uint32_t p) {
  return raw_mod(raw_mul(a, b, p), m, p);
}

RawPoly raw_gcd(RawPoly a, RawPoly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    RawPoly r = raw_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

RawPoly raw_powmod(RawPoly base, std::uint64_t e, const RawPoly& m, std::uint32_t p) {
  RawPoly result{1};
  base = raw_mod(base, m, p);
  while (e) {
    if (e & 1) result = raw_mulmod(result, base, m, p);
    base = raw_mulmod(base, base, m, p);
    e >>= 1;
  }
  return result;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_irreducible_mod_p(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
  RawPoly f = poly;
  for (auto& c : f) c %= p;
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t n = f.size() - 1;
  if (n == 1) return true;
  // Ben-Or: no common factor with x^{p^i} - x for i <= n/2.
  RawPoly h{0, 1};
  for (std::size_t i = 1; i <= n / 2; ++i) {
    h = raw_powmod(h, p, f, p);
    RawPoly diff = h;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    if (diff.empty()) return false;
    if (raw_gcd(f, diff, p).size() > 1) return false;
  }
  return true;
}

std::vector<std::uint32_t> canonical_modulus(std::uint32_t p, std::uint32_t k) {
  if (k == 1) return {0, 1};
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < k; ++i) count *= p;
  RawPoly cand(k + 1, 0);
  cand[k] = 1;
  for (std::uint64_t n = 0; n < count; ++n) {
    // c_0 is the most significant position of the lexicographic order
    std::uint64_t rest = n;
    for (std::uint32_t i = k; i-- > 0;) {
      cand[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    if (cand[0] == 0) continue;
    if (is_irreducible_mod_p(cand, p)) return cand;
  }
  throw Error(ErrorCode::Internal, "no irreducible polynomial found");
}

namespace {
std::atomic<std::uint64_t> g_field_size_limit{kDefaultMaxFieldSize};
}

std::uint64_t field_size_limit() { return g_field_size_limit.load(); }
void set_field_size_limit(std::uint64_t max_q) { g_field_size_limit.store(max_q); }

const GaloisField& GaloisField::make(std::uint64_t p, std::uint64_t k, std::uint64_t max_q) {
  if (max_q == 0) max_q = field_size_limit();
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (k < 1) throw Error(ErrorCode::BoundExceeded, "extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    q *= p;
    if (q > max_q || q > (std::uint64_t{1} << 31)) {
      throw Error(ErrorCode::BoundExceeded,
                  std::to_string(p) + "^" + std::to_string(k) + " exceeds field bound " +
                      std::to_string(max_q));
    }
  }
  static std::mutex mutex;
  static std::map<std::pair<std::uint64_t, std::uint64_t>, std::unique_ptr<GaloisField>> registry;
  std::lock_guard lock(mutex);
  auto it = registry.find({p, k});
  if (it != registry.end()) return *it->second;
  auto modulus = canonical_modulus(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(k));
  std::unique_ptr<GaloisField> field(
      new GaloisField(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(k), modulus));
  auto& ref = *field;
  registry.emplace(std::make_pair(p, k), std::move(field));
  return ref;
}

GaloisField::GaloisField(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus)
    : p_(p), k_(k), modulus_(std::move(modulus)) {
  pow_p_.resize(k + 1);
  pow_p_[0] = 1;
  for (std::uint32_t i = 1; i <= k; ++i) pow_p_[i] = pow_p_[i - 1] * p;
  q_ = pow_p_[k];

  auto encode = [&](const RawPoly& a) {
    std::uint32_t v = 0;
    for (std::size_t i = a.size(); i-- > 0;) v = v * p + a[i];
    return v;
  };
  auto decode = [&](std::uint32_t v) {
    RawPoly a(k, 0);
    for (std::uint32_t i = 0; i < k; ++i) {
      a[i] = v % p;
      v /= p;
    }
    trim(a);
    return a;
  };

  // primitive element: least encoding whose order is q - 1
  const std::uint64_t order = q_ - 1;
  const auto factors = prime_factors(order);
  std::uint32_t gen = 1;
  for (std::uint32_t cand = (q_ == 2 ? 1 : 2); cand < q_; ++cand) {
    const RawPoly c = decode(cand);
    bool ok = true;
    for (auto r : factors) {
      if (raw_powmod(c, order / r, modulus_, p) == RawPoly{1}) {
        ok = false;
        break;
      }
    }
    if (ok) {
      gen = cand;
      break;
    }
  }
  exp_.resize(order);
  log_.assign(q_, 0);
  RawPoly cur{1};
  const RawPoly g = decode(gen);
  for (std::uint64_t i = 0; i < order; ++i) {
    const std::uint32_t v = encode(cur);
    exp_[i] = v;
    log_[v] = static_cast<std::uint32_t>(i);
    cur = raw_mulmod(cur, g, modulus_, p);
  }

  if (p == 2) {
    as_root_.assign(q_, q_);
    for (std::uint32_t w = 0; w < q_; ++w) {
      const std::uint32_t d = add(mul(w, w), w);
      if (as_root_[d] == q_) as_root_[d] = w;
    }
  }
}

std::string GaloisField::name() const {
  if (k_ == 1) return "GF(" + std::to_string(p_) + ")";
  return "GF(" + std::to_string(p_) + "^" + std::to_string(k_) + ")";
}

Fq GaloisField::element(std::uint64_t encoding) const {
  if (encoding >= q_) {
    throw Error(ErrorCode::Parse,
                "element encoding " + std::to_string(encoding) + " out of range for " + name());
  }
  return Fq(this, static_cast<std::uint32_t>(encoding));
}

Fq GaloisField::from_int(std::int64_t n) const {
  const std::int64_t r = ((n % p_) + p_) % p_;
  return Fq(this, static_cast<std::uint32_t>(r));
}

Fq GaloisField::from_coeffs(const std::vector<std::uint32_t>& coeffs) const {
  if (coeffs.size() > k_) throw Error(ErrorCode::Parse, "too many residue coefficients");
  std::uint32_t v = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) v = v * p_ + coeffs[i] % p_;
  return Fq(this, v);
}

std::vector<Fq> GaloisField::elements() const {
  std::vector<Fq> out;
  out.reserve(q_);
  for (std::uint32_t v = 0; v < q_; ++v) out.emplace_back(this, v);
  return out;
}

std::vector<std::uint32_t> GaloisField::digits(std::uint32_t v) const {
  std::vector<std::uint32_t> d(k_);
  for (std::uint32_t i = 0; i < k_; ++i) {
    d[i] = v % p_;
    v /= p_;
  }
  return d;
}

std::uint32_t GaloisField::add(std::uint32_t a, std::uint32_t b) const {
  if (p_ == 2) return a ^ b;
  if (k_ == 1) return (a + b) % p_;
  std::uint32_t r = 0;
  for (std::uint32_t i = 0; i < k_; ++i) {
    const std::uint32_t s = (a % p_ + b % p_) % p_;
    r += s * pow_p_[i];
    a /= p_;
    b /= p_;
  }
  return r;
}

std::uint32_t GaloisField::neg(std::uint32_t a) const {
  if (p_ == 2) return a;
  if (k_ == 1) return (p_ - a) % p_;
  std::uint32_t r = 0;
  for (std::uint32_t i = 0; i < k_; ++i) {
    r += ((p_ - a % p_) % p_) * pow_p_[i];
    a /= p_;
  }
  return r;
}

std::uint32_t GaloisField::sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

std::uint32_t GaloisField::mul(std::uint32_t a, std::uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  const std::uint64_t s = std::uint64_t{log_[a]} + log_[b];
  return exp_[s % (q_ - 1)];
}

std::uint32_t GaloisField::inv(std::uint32_t a) const {
  if (a == 0) throw Error(ErrorCode::Internal, "division by zero in " + name());
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

bool GaloisField::is_square(Fq a) const {
  if (a.is_zero() || p_ == 2) return true;
  return log_[a.value()] % 2 == 0;
}

std::optional<Fq> GaloisField::sqrt(Fq a) const {
  if (a.is_zero()) return zero();
  if (p_ == 2) {
    const std::uint64_t l = std::uint64_t{log_[a.value()]} * (q_ / 2);
    return Fq(this, exp_[l % (q_ - 1)]);
  }
  const std::uint32_t l = log_[a.value()];
  if (l % 2 != 0) return std::nullopt;
  const Fq r(this, exp_[l / 2]);
  const Fq s = -r;
  return std::min(r, s);
}

std::vector<Fq> GaloisField::quadratic_roots(Fq b, Fq c) const {
  std::vector<Fq> roots;
  if (p_ == 2) {
    if (b.is_zero()) {
      roots.push_back(*sqrt(c));
      return roots;
    }
    const Fq d = c / (b * b);
    const std::uint32_t w = as_root_[d.value()];
    if (w == q_) return roots;
    roots.push_back(b * Fq(this, w));
    roots.push_back(b * (Fq(this, w) + one()));
  } else {
    const Fq two_inv = from_int(2).inverse();
    const Fq disc = b * b - from_int(4) * c;
    auto s = sqrt(disc);
    if (!s) return roots;
    roots.push_back((-b + *s) * two_inv);
    if (!s->is_zero()) roots.push_back((-b - *s) * two_inv);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

bool Fq::is_one() const { return value_ == 1; }

std::vector<std::uint32_t> Fq::coeffs() const { return field_->digits(value_); }

Fq Fq::operator-() const { return Fq(field_, field_->neg(value_)); }

Fq Fq::inverse() const { return Fq(field_, field_->inv(value_)); }

Fq Fq::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  Fq result = field_->one();
  Fq base = *this;
  while (e) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

Fq& Fq::operator+=(Fq o) {
  value_ = field_->add(value_, o.value_);
  return *this;
}

Fq& Fq::operator-=(Fq o) {
  value_ = field_->sub(value_, o.value_);
  return *this;
}

Fq& Fq::operator*=(Fq o) {
  value_ = field_->mul(value_, o.value_);
  return *this;
}

Fq& Fq::operator/=(Fq o) {
  value_ = field_->mul(value_, field_->inv(o.value_));
  return *this;
}

FieldEmbedding::FieldEmbedding(const GaloisField& from, const GaloisField& to)
    : from_(&from), to_(&to) {
  if (from.p() != to.p() || to.k() % from.k() != 0) {
    throw Error(ErrorCode::Internal, from.name() + " does not embed in " + to.name());
  }
  table_.resize(from.q());
  if (&from == &to) {
    std::iota(table_.begin(), table_.end(), 0u);
    return;
  }
  const auto& m = from.modulus();
  Fq root = to.zero();
  bool found = false;
  for (const Fq cand : to.elements()) {
    Fq acc = to.zero();
    for (std::size_t i = m.size(); i-- > 0;) acc = acc * cand + to.from_int(m[i]);
    if (acc.is_zero()) {
      root = cand;
      found = true;
      break;
    }
  }
  if (!found) throw Error(ErrorCode::Internal, "modulus has no root in extension");
  for (std::uint32_t v = 0; v < from.q(); ++v) {
    const auto d = from.digits(v);
    Fq acc = to.zero();
    for (std::size_t i = d.size(); i-- > 0;) acc = acc * root + to.from_int(d[i]);
    table_[v] = acc.value();
  }
}

}  // namespace equicurve
