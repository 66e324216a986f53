#include <doctest.h>

#include <random>

#include "equicurve/automorphism.hpp"
#include "equicurve/deformation.hpp"
#include "equicurve/differentials.hpp"
#include "equicurve/json_io.hpp"
#include "equicurve/rrspace.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace equicurve;

namespace {

Matrix from_rows(const GaloisField& F, const std::vector<std::vector<int>>& rows) {
  Matrix m(F, static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      m(static_cast<int>(i), static_cast<int>(j)) = F.from_int(rows[i][j]);
  return m;
}

GroupRepresentation klein_example() {
  const auto& F = field_make(3, 1);
  return make_representation(F, 3,
                             {from_rows(F, {{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}),
                              from_rows(F, {{1, 0, 1}, {0, 1, 0}, {0, 0, 1}})},
                             9);
}

Matrix random_invertible(const GaloisField& F, int n, std::mt19937& rng) {
  for (;;) {
    Matrix m(F, n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = F.element(rng() % F.q());
    if (m.rank() == n) return m;
  }
}

// direct sum of unipotent Jordan blocks of the given sizes
Matrix jordan(const GaloisField& F, const std::vector<int>& sizes) {
  int n = 0;
  for (int s : sizes) n += s;
  Matrix m = Matrix::identity(F, n);
  int at = 0;
  for (int s : sizes) {
    for (int i = 0; i + 1 < s; ++i) m(at + i, at + i + 1) = F.one();
    at += s;
  }
  return m;
}

}  // namespace

TEST_CASE("invariants and coinvariants of the elementary abelian example differ") {
  const auto rep = klein_example();
  CHECK(inv_coinv_dims(rep) == std::make_pair(1, 2));
  CHECK(check_duality(rep));
  const auto dual = dual_representation(rep);
  CHECK(inv_coinv_dims(dual).first == 2);
  const auto hyp = check_groups_hypothesis({rep}, std::nullopt, 3);
  CHECK(hyp.status() == "fails");

  const auto parsed = parse_representation(read_json_file(std::string(EQUICURVE_DATA) + "/rep_z3xz3.json"));
  CHECK(inv_coinv_dims(parsed) == std::make_pair(1, 2));
  CHECK(parsed.group_order == 9);
}

TEST_CASE("trivial and semisimple representations") {
  for (int d = 1; d <= 5; ++d) {
    const auto& F = field_make(5, 1);
    const auto rep = make_representation(F, d, {Matrix::identity(F, d)});
    CHECK(inv_coinv_dims(rep) == std::make_pair(d, d));
    CHECK(check_duality(rep));
  }
  const auto& F7 = field_make(7, 1);
  const auto diag = make_representation(F7, 5, {from_rows(F7, {{1, 0, 0, 0, 0},
                                                               {0, 1, 0, 0, 0},
                                                               {0, 0, 1, 0, 0},
                                                               {0, 0, 0, 1, 0},
                                                               {0, 0, 0, 0, -1}})});
  CHECK(inv_coinv_dims(diag) == std::make_pair(4, 4));
}

TEST_CASE("order prime to p: invariants equal coinvariants") {
  std::mt19937 rng(41);
  const auto& F = field_make(7, 1);
  for (int t = 0; t < 20; ++t) {
    const int n = 2 + static_cast<int>(rng() % 4);
    Matrix d(F, n, n);
    // eigenvalues in the order-3 subgroup {1, 2, 4}
    for (int i = 0; i < n; ++i) d(i, i) = F.from_int(std::vector<int>{1, 2, 4}[rng() % 3]);
    const Matrix P = random_invertible(F, n, rng);
    const auto rep = make_representation(F, n, {P * d * *P.inverse()}, 3);
    const auto dims = inv_coinv_dims(rep);
    CHECK(dims.first == dims.second);
    CHECK(check_duality(rep));
  }
}

TEST_CASE("cyclic p-groups: both sides count Jordan blocks") {
  std::mt19937 rng(43);
  for (int p : {2, 3}) {
    const auto& F = field_make(p, 1);
    for (int t = 0; t < 20; ++t) {
      std::vector<int> sizes;
      int n = 0;
      while (n < 5) {
        const int s = 1 + static_cast<int>(rng() % static_cast<unsigned>(p));
        sizes.push_back(s);
        n += s;
      }
      const Matrix P = random_invertible(F, n, rng);
      const auto rep = make_representation(F, n, {P * jordan(F, sizes) * *P.inverse()}, p);
      const auto dims = inv_coinv_dims(rep);
      CHECK(dims.first == static_cast<int>(sizes.size()));
      CHECK(dims.second == static_cast<int>(sizes.size()));
      CHECK(check_duality(rep));
    }
  }
}

TEST_CASE("duality on random representations") {
  std::mt19937 rng(47);
  for (int p : {2, 3, 5}) {
    const auto& F = field_make(p, 1);
    for (int t = 0; t < 15; ++t) {
      const int n = 1 + static_cast<int>(rng() % 5);
      std::vector<Matrix> gens;
      for (int g = 0; g < 2; ++g) gens.push_back(random_invertible(F, n, rng));
      CHECK(check_duality(make_representation(F, n, gens)));
    }
  }
}

TEST_CASE("malformed representations") {
  const auto& F = field_make(3, 1);
  CHECK(error_of([&] { make_representation(F, 2, {from_rows(F, {{1, 1}, {1, 1}})}); }) == ErrorCode::Parse);
  CHECK(error_of([&] { make_representation(F, 3, {Matrix::identity(F, 2)}); }) == ErrorCode::Parse);
}

TEST_CASE("deformation dimension on the corpus profiles") {
  const auto p1 = parse_profile(read_json_file(std::string(EQUICURVE_DATA) + "/profile_C1.json"));
  const auto p2 = parse_profile(read_json_file(std::string(EQUICURVE_DATA) + "/profile_C2.json"));
  const auto p3 = parse_profile(read_json_file(std::string(EQUICURVE_DATA) + "/profile_tame_gY1.json"));
  CHECK(deformation_dim(p1).dim == 3);
  CHECK(deformation_dim(p1).crosscheck == 3);
  CHECK(deformation_dim(p2).dim == 3);
  CHECK(deformation_dim(p2).crosscheck == 3);
  CHECK(profile_validate(p3) == 2);
  CHECK(deformation_dim(p3).dim == 2);
  CHECK(deformation_dim(p3).crosscheck == 2);
  const RamificationProfile low{2, 0, std::vector<BranchPoint>(4, BranchPoint::tame(2)), 5};
  CHECK(error_of([&] { deformation_dim(low); }) == ErrorCode::GenusTooSmall);
}

TEST_CASE("deformation dimension equals invariant quadratic differentials on concrete covers") {
  const auto& F4 = field_make(2, 2);
  const HyperellipticModel as5(Poly::constant(F4.one()), Poly::from_ints(F4, {0, 0, 0, 0, 0, 1}));
  const CurveAutomorphism tau(F4.one(), F4.one(), F4.one(), Poly(F4, {F4.primitive(), F4.one(), F4.one()}));
  const auto c1 = oracle::c1();
  const auto& F7 = c1.field();
  const std::vector<std::pair<HyperellipticModel, std::vector<CurveAutomorphism>>> cases{
      {c1, {CurveAutomorphism::hyperelliptic_involution(c1)}},
      {oracle::c2(), {CurveAutomorphism::hyperelliptic_involution(oracle::c2())}},
      {c1, {CurveAutomorphism::diagonal(F7.from_int(3), F7.zero(), F7.one()),
            CurveAutomorphism::hyperelliptic_involution(c1)}},
      {c1, {CurveAutomorphism::diagonal(F7.from_int(-1), F7.zero(), F7.one())}},
      {as5, {tau, CurveAutomorphism::hyperelliptic_involution(as5)}},
      {oracle::xy_model(7), {CurveAutomorphism::hyperelliptic_involution(oracle::xy_model(7))}},
  };
  for (const auto& [model, gens] : cases) {
    const auto group = generate_group(model, gens);
    const ConcreteCover cover = profile_from_curve(model, group);
    const DeformationDim dd = deformation_dim(cover.profile);
    CHECK(dd.dim == dd.crosscheck);
    const auto act = action_on_polydiff(model, gens, 2);
    CHECK(invariant_dim_concrete(act) == dd.dim);
    const int n = static_cast<int>(group.size());
    const int p = static_cast<int>(model.field().p());
    const auto rep = GroupRepresentation{&model.field(), act.dim, act.generators, n};
    std::optional<GroupShape> shape;
    if (n % p != 0) shape = GroupShape{n, 1};
    const auto hyp = check_groups_hypothesis({rep}, shape, p);
    CHECK(hyp.status() == (n % p != 0 ? "proved" : "sampled"));
  }
}

TEST_CASE("hypothesis report states") {
  const auto& F = field_make(2, 1);
  const auto rep = make_representation(F, 2, {jordan(F, {2})}, 2);
  CHECK(check_groups_hypothesis({rep}, std::nullopt, 2).status() == "sampled");
  CHECK(check_groups_hypothesis({}, std::nullopt, 2).status() == "unchecked");
  CHECK(check_groups_hypothesis({}, GroupShape{1, 2}, 2).status() == "proved");
  CHECK(check_groups_hypothesis({}, GroupShape{2, 1}, 2).status() == "unchecked");
  CHECK(check_groups_hypothesis({klein_example()}, GroupShape{9, 1}, 3).status() == "fails");
}
