#include <doctest.h>

#include <random>

#include "equicurve/errors.hpp"
#include "equicurve/matrix.hpp"
#include "equicurve/poly.hpp"
#include "equicurve/series.hpp"
#include "oracles.hpp"

using namespace equicurve;

namespace {

oracle::IntPoly as_int(const std::vector<std::uint32_t>& v) { return oracle::IntPoly(v.begin(), v.end()); }

Fq random_element(const GaloisField& F, std::mt19937& rng) { return F.element(rng() % F.q()); }

Poly random_poly(const GaloisField& F, int degree, std::mt19937& rng) {
  Vec c;
  for (int i = 0; i <= degree; ++i) c.push_back(random_element(F, rng));
  return Poly(F, c);
}

}  // namespace

TEST_CASE("prime fields use the modulus x") {
  const auto& F = field_make(7, 1);
  CHECK(F.q() == 7);
  CHECK(F.modulus() == std::vector<std::uint32_t>{0, 1});
  CHECK(F.from_int(-1).value() == 6);
}

TEST_CASE("canonical modulus is the first irreducible polynomial in enumeration order") {
  for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {5, 2}, {7, 2}}) {
    oracle::IntPoly expected;
    // c_0 varies slowest
    std::vector<oracle::IntPoly> cands = oracle::monic_polys(k, p);
    std::sort(cands.begin(), cands.end(), [](const auto& a, const auto& b) {
      return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    });
    for (const auto& c : cands) {
      if (oracle::irreducible(c, p)) {
        expected = c;
        break;
      }
    }
    CAPTURE(p);
    CAPTURE(k);
    CHECK(as_int(canonical_modulus(p, k)) == expected);
    CHECK(as_int(field_make(p, k).modulus()) == expected);
  }
}

TEST_CASE("same (p, k) gives the same field object") {
  CHECK(&field_make(2, 4) == &field_make(2, 4));
}

TEST_CASE("field_make rejects composite p and oversized fields") {
  CHECK_THROWS_AS(field_make(4, 1), Error);
  try {
    field_make(4, 1);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotPrime);
  }
  try {
    field_make(2, 21);
    FAIL("expected BoundExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BoundExceeded);
  }
}

TEST_CASE("field multiplication agrees with residue polynomial arithmetic") {
  std::mt19937 rng(7);
  for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 4}, {3, 3}, {7, 2}, {2, 8}, {5, 3}}) {
    const auto& F = field_make(p, k);
    const auto modulus = as_int(F.modulus());
    for (int t = 0; t < 200; ++t) {
      const Fq a = random_element(F, rng);
      const Fq b = random_element(F, rng);
      auto expected = oracle::field_mul(as_int(a.coeffs()), as_int(b.coeffs()), modulus, p);
      auto got = as_int((a * b).coeffs());
      oracle::trim(got);
      CHECK(got == expected);
      if (!a.is_zero()) CHECK(a * a.inverse() == F.one());
      CHECK((a + b) - b == a);
    }
  }
}

TEST_CASE("the multiplicative group is cyclic of order q - 1 with the chosen generator") {
  for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 4}, {3, 2}, {7, 2}}) {
    const auto& F = field_make(p, k);
    const Fq g = F.primitive();
    Fq cur = g;
    int order = 1;
    while (!cur.is_one()) {
      cur *= g;
      ++order;
    }
    CHECK(order == static_cast<int>(F.q()) - 1);
    CHECK(g.pow(-1) == g.inverse());
  }
}

TEST_CASE("square roots and quadratic roots by exhaustion") {
  for (auto [p, k] : std::vector<std::pair<int, int>>{{7, 1}, {3, 2}, {2, 3}}) {
    const auto& F = field_make(p, k);
    for (const Fq b : F.elements()) {
      for (const Fq c : F.elements()) {
        std::vector<Fq> expected;
        for (const Fq z : F.elements()) {
          if (z * z + b * z + c == F.zero()) expected.push_back(z);
        }
        CHECK(F.quadratic_roots(b, c) == expected);
      }
      if (p != 2) {
        bool any = false;
        for (const Fq z : F.elements()) any = any || z * z == b;
        CHECK(F.is_square(b) == any);
        const auto s = F.sqrt(b);
        CHECK(s.has_value() == any);
        if (s) CHECK(*s * *s == b);
      }
    }
  }
}

TEST_CASE("field embeddings are ring homomorphisms") {
  const auto& small = field_make(2, 2);
  const auto& big = field_make(2, 4);
  const FieldEmbedding emb(small, big);
  for (const Fq a : small.elements()) {
    for (const Fq b : small.elements()) {
      CHECK(emb(a * b) == emb(a) * emb(b));
      CHECK(emb(a + b) == emb(a) + emb(b));
    }
  }
  CHECK(emb(small.one()) == big.one());
}

TEST_CASE("polynomial division, gcd and composition") {
  std::mt19937 rng(11);
  const auto& F = field_make(5, 2);
  for (int t = 0; t < 50; ++t) {
    const Poly a = random_poly(F, 7, rng);
    Poly b = random_poly(F, 3, rng);
    if (b.is_zero()) continue;
    const auto [q, r] = divmod(a, b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
    const Poly c = random_poly(F, 2, rng);
    if (c.degree() < 1) continue;
    const Poly g = gcd(a * c, b * c);
    CHECK((a * c) % g == Poly(F));
    CHECK((b * c) % g == Poly(F));
    CHECK(g % c.monic() == Poly(F));
    const Fq x0 = random_element(F, rng);
    CHECK(a.compose(b)(x0) == a(b(x0)));
    CHECK(a.taylor_shift(x0)(F.zero()) == a(x0));
  }
  CHECK(Poly(F).degree() == -1);
  CHECK_THROWS(divmod(Poly::x(F), Poly(F)));
}

TEST_CASE("roots with multiplicity against evaluation") {
  const auto& F = field_make(7, 1);
  const Poly f = Poly::linear_root(F.from_int(2)).pow(3) * Poly::linear_root(F.from_int(5)) *
                 Poly::from_ints(F, {1, 0, 1});  // x^2 + 1 has no roots mod 7
  const auto roots = roots_with_multiplicity(f);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == std::make_pair(F.from_int(2), 3));
  CHECK(roots[1] == std::make_pair(F.from_int(5), 1));
  for (const Fq a : F.elements()) CHECK((f(a).is_zero()) == (a == F.from_int(2) || a == F.from_int(5)));
  CHECK(f.order_at(F.from_int(2)) == 3);
  CHECK(splitting_degree(Poly::from_ints(F, {1, 0, 1})) == 2);
}

TEST_CASE("squarefree test against trial division") {
  const int p = 3;
  const auto& F = field_make(p, 1);
  for (int d = 1; d <= 5; ++d) {
    for (const auto& c : oracle::monic_polys(d, p)) {
      std::vector<std::int64_t> ints(c.begin(), c.end());
      CHECK(poly_squarefree(Poly::from_ints(F, ints)) == oracle::squarefree(c, p));
    }
  }
}

TEST_CASE("power series inverse and square roots") {
  std::mt19937 rng(3);
  const auto& F = field_make(11, 1);
  for (int t = 0; t < 20; ++t) {
    Vec c;
    for (int i = 0; i < 12; ++i) c.push_back(random_element(F, rng));
    c[0] = F.from_int(4);
    const Series s(F, c, 12);
    const Series prod = s * s.inverse();
    CHECK(prod == Series::constant(F.one(), 12));
    const Series r = series_sqrt(s, F.from_int(2));
    CHECK(r * r == s);
    CHECK(r.coeff(0) == F.from_int(2));
  }
  const Series t = Series::variable(F, 5);
  CHECK(t.valuation() == 1);
  CHECK_THROWS(t.inverse());
  CHECK_THROWS(t.coeff(5));
}

TEST_CASE("Artin-Schreier series roots in characteristic 2") {
  const auto& F = field_make(2, 3);
  const Series h = Series::constant(F.one(), 10);
  const Series s = Series::from_poly(Poly::from_ints(F, {0, 1, 0, 1}), 10);
  for (const Fq init : {F.zero(), F.one()}) {
    const Series z = series_artin_schreier_root(h, s, init);
    CHECK(z * z - h * z == s);
  }
}

TEST_CASE("matrices: rank-nullity, kernels, inverses") {
  std::mt19937 rng(5);
  const auto& F = field_make(3, 2);
  for (int t = 0; t < 30; ++t) {
    const int rows = 1 + static_cast<int>(rng() % 5);
    const int cols = 1 + static_cast<int>(rng() % 6);
    Matrix m(F, rows, cols);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) m(r, c) = rng() % 3 == 0 ? F.zero() : random_element(F, rng);
    const auto ker = kernel_basis(m);
    CHECK(m.rank() + static_cast<int>(ker.size()) == cols);
    for (const auto& v : ker) {
      for (const auto& x : m.apply(v)) CHECK(x.is_zero());
    }
    CHECK(m.rref().rref() == m.rref());
    CHECK(m.transpose().rank() == m.rank());
    if (rows == cols) {
      const auto inv = m.inverse();
      CHECK(inv.has_value() == (m.rank() == rows));
      if (inv) CHECK((m * *inv).is_identity());
    }
    Vec x;
    for (int c = 0; c < cols; ++c) x.push_back(random_element(F, rng));
    const auto sol = m.solve(m.apply(x));
    REQUIRE(sol.has_value());
    CHECK(m.apply(*sol) == m.apply(x));
  }
}
