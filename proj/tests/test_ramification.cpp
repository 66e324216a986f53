#include <doctest.h>

#include "equicurve/automorphism.hpp"
#include "equicurve/ramification.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace equicurve;

namespace {

ConcreteCover cover_of(const HyperellipticModel& model, std::vector<CurveAutomorphism> gens) {
  gens.push_back(CurveAutomorphism::hyperelliptic_involution(model));
  return profile_from_curve(model, generate_group(model, gens));
}

// y^2 + y = x^5 over GF(4) with tau: x -> x + 1, y -> y + x^2 + x + w
std::pair<HyperellipticModel, CurveAutomorphism> wild_klein() {
  const auto& F = field_make(2, 2);
  const Fq w = F.primitive();
  const HyperellipticModel model(Poly::constant(F.one()), Poly::from_ints(F, {0, 0, 0, 0, 0, 1}));
  const CurveAutomorphism tau(F.one(), F.one(), F.one(), Poly(F, {w, F.one(), F.one()}));
  return {model, tau};
}

std::vector<ConcreteCover> sample_covers() {
  std::vector<ConcreteCover> out;
  const auto c1 = oracle::c1();
  const auto& F7 = c1.field();
  out.push_back(cover_of(c1, {}));
  out.push_back(cover_of(c1, {CurveAutomorphism::diagonal(F7.from_int(3), F7.zero(), F7.one())}));
  out.push_back(cover_of(c1, {CurveAutomorphism::diagonal(F7.from_int(-1), F7.zero(), F7.one())}));
  out.push_back(cover_of(oracle::c2(), {}));
  out.push_back(cover_of(oracle::xy_model(5), {}));
  out.push_back(cover_of(oracle::split_odd(7), {}));
  const auto [model, tau] = wild_klein();
  out.push_back(cover_of(model, {tau}));
  return out;
}

}  // namespace

TEST_CASE("C1 modulo the involution: six tame branch points") {
  const ConcreteCover cover = cover_of(oracle::c1(), {});
  const auto& prof = cover.profile;
  CHECK(prof.n == 2);
  CHECK(prof.gY == 0);
  REQUIRE(prof.branch.size() == 6);
  for (const auto& b : prof.branch) {
    CHECK(b.e == 2);
    CHECK(b.delta() == 1);
    CHECK_FALSE(b.wild());
  }
  CHECK(profile_validate(prof) == 2);
  CHECK(2 * 2 - 2 == prof.n * (2 * prof.gY - 2) + ramification_degree(prof));
  CHECK(is_tame(prof));
}

TEST_CASE("C2 modulo the involution: one wild branch point with jump 5") {
  const ConcreteCover cover = cover_of(oracle::c2(), {});
  const auto& prof = cover.profile;
  CHECK(prof.n == 2);
  CHECK(prof.gY == 0);
  REQUIRE(prof.branch.size() == 1);
  CHECK(prof.branch[0].e == 2);
  CHECK(prof.branch[0].filtration == std::vector<int>{2, 2, 2, 2, 2, 2});
  CHECK(prof.branch[0].delta() == 6);
  CHECK(profile_validate(prof) == 2);
  CHECK(wild_excess(prof) == 5);
}

TEST_CASE("trivial group gives the identity cover") {
  const auto c1 = oracle::c1();
  const ConcreteCover cover = profile_from_curve(c1, {CurveAutomorphism::identity(c1)});
  CHECK(cover.profile.n == 1);
  CHECK(cover.profile.gY == 2);
  CHECK(cover.profile.branch.empty());
  CHECK(profile_validate(cover.profile) == 2);
}

TEST_CASE("group lists must be closed and duplicate-free") {
  const auto c1 = oracle::c1();
  const auto& F7 = c1.field();
  const auto rho = CurveAutomorphism::diagonal(F7.from_int(3), F7.zero(), F7.one());
  CHECK(error_of([&] { profile_from_curve(c1, {CurveAutomorphism::identity(c1), rho}); }) == ErrorCode::NotAGroup);
  const auto sigma = CurveAutomorphism::hyperelliptic_involution(c1);
  CHECK(error_of([&] { profile_from_curve(c1, {CurveAutomorphism::identity(c1), sigma, sigma}); }) ==
        ErrorCode::NotFaithful);
}

TEST_CASE("profile validation by Hurwitz") {
  RamificationProfile tame6{2, 0, std::vector<BranchPoint>(6, BranchPoint::tame(2)), std::nullopt};
  CHECK(profile_validate(tame6) == 2);
  RamificationProfile wild3{3, 0, {BranchPoint{3, {3, 3}}}, 3};
  CHECK(profile_validate(wild3) == 0);
  RamificationProfile tame5{2, 0, std::vector<BranchPoint>(5, BranchPoint::tame(2)), std::nullopt};
  CHECK(error_of([&] { profile_validate(tame5); }) == ErrorCode::HurwitzInconsistent);
  RamificationProfile negative{2, 0, {BranchPoint::tame(2)}, std::nullopt};
  CHECK(error_of([&] { profile_validate(negative); }) == ErrorCode::HurwitzInconsistent);
}

TEST_CASE("malformed filtrations") {
  auto with = [](int n, BranchPoint b, std::optional<int> p = std::nullopt) {
    RamificationProfile prof{n, 1, {b}, p};
    return error_of([&] { profile_validate(prof); });
  };
  CHECK(with(4, BranchPoint{2, {2, 4}}) == ErrorCode::BadFiltration);
  CHECK(with(4, BranchPoint{2, {4}}) == ErrorCode::BadFiltration);
  CHECK(with(4, BranchPoint{3, {3}}) == ErrorCode::BadFiltration);
  CHECK(with(4, BranchPoint{4, {4, 3}}) == ErrorCode::BadFiltration);
  CHECK(with(4, BranchPoint{4, {}}) == ErrorCode::BadFiltration);
  // a wild tail is only possible when p divides e
  CHECK(with(3, BranchPoint{3, {3, 3}}, 2) == ErrorCode::BadFiltration);
  CHECK(with(2, BranchPoint{2, {2}}, 2) == ErrorCode::BadFiltration);
  CHECK_FALSE(with(2, BranchPoint{2, {2, 2}}, 2).has_value());
}

TEST_CASE("a wild Klein four-group on y^2 + y = x^5 over GF(4)") {
  const auto [model, tau] = wild_klein();
  check_automorphism(model, tau);
  CHECK(element_order(model, tau) == 2);
  const ConcreteCover cover = cover_of(model, {tau});
  const auto& prof = cover.profile;
  CHECK(prof.n == 4);
  CHECK(prof.gY == 0);
  REQUIRE(prof.branch.size() == 1);
  CHECK(prof.branch[0].e == 4);
  CHECK(prof.branch[0].filtration == std::vector<int>{4, 4, 2, 2, 2, 2});
  CHECK(prof.branch[0].delta() == 10);
  CHECK(profile_validate(prof) == 2);
}

TEST_CASE("Hurwitz closes on concrete covers and R agrees place by place") {
  for (const auto& cover : sample_covers()) {
    CAPTURE(cover.profile.n);
    CHECK(profile_validate(cover.profile) == cover.base.genus());
    const Divisor R = ramification_divisor(cover);
    CHECK(R.degree() == ramification_degree(cover.profile));
    CHECK(R.is_effective());
    CHECK(divisor_invariant(cover.model, cover.group, R));
    CHECK(is_tame(cover.profile) == (wild_excess(cover.profile) == 0));
    bool all_tame = true;
    for (const auto& b : cover.profile.branch) all_tame = all_tame && b.delta() == b.e - 1;
    CHECK(is_tame(cover.profile) == all_tame);
  }
}

TEST_CASE("Hilbert's formula: delta is the sum of lower ramification indices") {
  for (const auto& cover : sample_covers()) {
    for (const auto& [P, d] : cover.delta) {
      int sum = 0;
      int stab = 0;
      for (const auto& g : cover.group) {
        if (!(place_image(cover.model, g, P) == P)) continue;
        ++stab;
        if (!g.is_identity()) sum += lower_ramification_index(cover.model, g, P);
      }
      CHECK(stab == cover.stabilizer.at(P));
      CHECK(sum == d);
    }
  }
}

TEST_CASE("a cyclic group of order 12 on C1") {
  const auto c1 = oracle::c1();
  const auto& F7 = c1.field();
  const ConcreteCover cover = cover_of(c1, {CurveAutomorphism::diagonal(F7.from_int(3), F7.zero(), F7.one())});
  CHECK(cover.profile.n == 12);
  CHECK(cover.profile.gY == 0);
  std::vector<int> es;
  for (const auto& b : cover.profile.branch) es.push_back(b.e);
  std::sort(es.begin(), es.end());
  CHECK(es == std::vector<int>{2, 6, 6});
  CHECK(cover.has_hyperelliptic_involution);
}

TEST_CASE("canonical divisors") {
  const ConcreteCover c1 = cover_of(oracle::c1(), {});
  const Divisor K1 = canonical_divisor(c1);
  CHECK(K1 == ramification_divisor(c1) - 2 * infinity_divisor(c1.model));
  CHECK(K1.degree() == 2);

  const ConcreteCover c2 = cover_of(oracle::c2(), {});
  const Place inf = places_at_infinity(c2.model).front();
  Divisor expected;
  expected.add(inf, 2);
  CHECK(canonical_divisor(c2) == expected);

  for (const auto& cover : sample_covers()) {
    if (cover.profile.gY != 0) continue;
    const Divisor K = canonical_divisor(cover);
    CHECK(K.degree() == 2 * cover.base.genus() - 2);
    CHECK(divisor_invariant(cover.model, cover.group, K));
  }

  const auto c1m = oracle::c1();
  const ConcreteCover identity = profile_from_curve(c1m, {CurveAutomorphism::identity(c1m)});
  CHECK(error_of([&] { canonical_divisor(identity); }) == ErrorCode::QuotientNotRational);
}

TEST_CASE("floor pushforward") {
  const ConcreteCover c1 = cover_of(oracle::c1(), {});
  const auto spec2K = invariant_spec(c1, 2 * canonical_divisor(c1));
  CHECK(pushforward_floor(c1.profile, spec2K).degree == 2);
  const auto specR = invariant_spec(c1, ramification_divisor(c1));
  CHECK(pushforward_floor(c1.profile, specR).degree == 0);

  const ConcreteCover c2 = cover_of(oracle::c2(), {});
  const auto spec = invariant_spec(c2, 2 * canonical_divisor(c2));
  CHECK(spec.branch_coeffs == std::vector<int>{4});
  CHECK(pushforward_floor(c2.profile, spec).degree == 2);

  Divisor half;
  half.add(places_over(c1.model, c1.model.field().from_int(1)).front(), 1);
  half.add(places_at_infinity(c1.model).front(), 1);
  CHECK(error_of([&] { invariant_spec(c1, half); }) == ErrorCode::NotInvariant);
}

TEST_CASE("floor division rounds toward minus infinity") {
  for (int a = -20; a <= 20; ++a) {
    for (int b = 1; b <= 6; ++b) {
      const int q = floor_div(a, b);
      const int r = floor_mod(a, b);
      CHECK(q * b + r == a);
      CHECK(r >= 0);
      CHECK(r < b);
      CHECK(q == (a - r) / b);
    }
  }
  CHECK(floor_div(-4, 1) == -4);
  CHECK(floor_div(-1, 2) == -1);
}

TEST_CASE("degrees of invariant divisor specs") {
  const RamificationProfile prof{2, 0, std::vector<BranchPoint>(6, BranchPoint::tame(2)), 7};
  const InvariantDivisorSpec spec{{2, 2, 2, 2, 2, 2}, {{-4, 1}}};
  CHECK(spec.degree(prof) == 6 * 2 - 8);
  CHECK(pushforward_floor(prof, spec).degree == 6 - 4);
}
