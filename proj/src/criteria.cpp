#include "equicurve/criteria.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include <boost/rational.hpp>

#include "equicurve/errors.hpp"

namespace equicurve {

using Rational = boost::rational<long long>;

std::string result_name(VerdictResult r) {
  switch (r) {
    case VerdictResult::Trivial: return "trivial";
    case VerdictResult::Faithful: return "faithful";
    case VerdictResult::NonFaithfulNonTrivial: return "nonfaithful_nontrivial";
    case VerdictResult::NonTrivial: return "nontrivial";
    case VerdictResult::OutsideHypotheses: return "outside_hypotheses";
  }
  return "unknown";
}

nlohmann::json Verdict::to_json() const {
  return nlohmann::json{{"result", result_name(result)}, {"clause", clause}, {"detail", detail}};
}

namespace {

std::string rational_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// Ramification points in X with their coefficients, one entry per branch point.
struct RamifiedCoeff {
  int coeff;
  int points;
};

std::vector<RamifiedCoeff> ramified_coeffs(const RamificationProfile& profile, const InvariantDivisorSpec& spec) {
  std::vector<RamifiedCoeff> out;
  for (std::size_t i = 0; i < profile.branch.size(); ++i) {
    out.push_back({spec.branch_coeffs[i], profile.n / profile.branch[i].e});
  }
  return out;
}

template <class Pred>
bool every_ramified(const std::vector<RamifiedCoeff>& rc, Pred pred) {
  return std::all_of(rc.begin(), rc.end(), [&](const RamifiedCoeff& c) { return pred(c.coeff); });
}

nlohmann::json base_detail(const RamificationProfile& profile, int gx, int deg) {
  return nlohmann::json{{"n", profile.n}, {"gX", gx}, {"gY", profile.gY}, {"degD", deg}};
}

}  // namespace

Verdict trivial_action_iff(const RamificationProfile& profile, const InvariantDivisorSpec& spec) {
  const int gx = profile_validate(profile);
  const int deg = spec.degree(profile);
  if (deg <= 2 * gx - 2) {
    throw Error(ErrorCode::DegreeTooSmall,
                "deg D = " + std::to_string(deg) + " must exceed 2g_X - 2 = " + std::to_string(2 * gx - 2));
  }
  Rational frac(0);
  for (std::size_t i = 0; i < profile.branch.size(); ++i) {
    const int e = profile.branch[i].e;
    frac += Rational(floor_mod(spec.branch_coeffs[i], e), e);
  }
  const Rational lhs(static_cast<long long>(profile.n - 1) * deg);
  const Rational rhs = Rational(profile.n) * (Rational(gx - profile.gY) - frac);
  Verdict v;
  v.clause = "trivialD";
  v.result = lhs == rhs ? VerdictResult::Trivial : VerdictResult::NonTrivial;
  v.detail = base_detail(profile, gx, deg);
  v.detail["lhs"] = rational_string(lhs);
  v.detail["rhs"] = rational_string(rhs);
  v.detail["fractional_sum"] = rational_string(frac);
  return v;
}

Verdict trivial_deg_ge_2g(const RamificationProfile& profile, const InvariantDivisorSpec& spec) {
  const int gx = profile_validate(profile);
  const int deg = spec.degree(profile);
  if (deg < 2 * gx || profile.n < 2 || gx < 1) {
    throw Error(ErrorCode::HypothesisViolated, "requires deg D >= 2g_X, n >= 2 and g_X >= 1");
  }
  const auto rc = ramified_coeffs(profile, spec);
  std::vector<std::string> failing;
  if (deg != 2 * gx) failing.push_back("deg(D)=2gX");
  if (profile.n != 2) failing.push_back("n=2");
  if (profile.gY != 0) failing.push_back("gY=0");
  if (!every_ramified(rc, [](int c) { return c % 2 == 0; })) failing.push_back("nP even at ramification points");
  Verdict v;
  v.clause = "trivialD2";
  v.result = failing.empty() ? VerdictResult::Trivial : VerdictResult::NonTrivial;
  v.detail = base_detail(profile, gx, deg);
  v.detail["failing"] = failing;
  return v;
}

Verdict trivial_deg_2gm1(const RamificationProfile& profile, const InvariantDivisorSpec& spec) {
  const int gx = profile_validate(profile);
  const int deg = spec.degree(profile);
  if (deg != 2 * gx - 1 || profile.n < 2 || gx < 2) {
    throw Error(ErrorCode::HypothesisViolated, "requires deg D = 2g_X - 1, n >= 2 and g_X >= 2");
  }
  const auto rc = ramified_coeffs(profile, spec);
  int odd_points = 0;
  for (const auto& c : rc) {
    if (c.coeff % 2 != 0) odd_points += c.points;
  }
  const bool first = profile.gY == 0 && profile.n == 2 && odd_points == 1;
  const bool second = profile.gY == 0 && profile.n == 3 && gx == 2 &&
                      every_ramified(rc, [](int c) { return c % 3 == 0; });
  Verdict v;
  v.result = first || second ? VerdictResult::Trivial : VerdictResult::NonTrivial;
  v.clause = first ? "trivialD3(n=2)" : second ? "trivialD3(n=3)" : "trivialD3";
  v.detail = base_detail(profile, gx, deg);
  v.detail["odd_ramification_points"] = odd_points;
  return v;
}

Verdict faithful_sufficient(const RamificationProfile& profile, const InvariantDivisorSpec& spec) {
  const int gx = profile_validate(profile);
  const int deg = spec.degree(profile);
  Verdict v;
  v.detail = base_detail(profile, gx, deg);
  if (gx < 2) {
    v.clause = "trivialD4";
    v.detail["reason"] = "gX < 2";
    return v;
  }
  const auto rc = ramified_coeffs(profile, spec);
  const bool all_odd = every_ramified(rc, [](int c) { return c % 2 != 0; });
  const bool all_even = every_ramified(rc, [](int c) { return c % 2 == 0; });
  const bool even_not3 = every_ramified(rc, [](int c) { return c % 2 == 0 && c % 3 != 0; });
  std::string clause;
  if (deg >= 2 * gx + 1) {
    clause = "a";
  } else if (deg == 2 * gx && all_odd) {
    clause = "b";
  } else if (deg == 2 * gx - 1 && gx >= 3 && all_even) {
    clause = "c";
  } else if (deg == 2 * gx - 1 && gx == 2 && even_not3) {
    clause = "d";
  }
  if (clause.empty()) {
    v.clause = "trivialD4";
    return v;
  }
  v.result = VerdictResult::Faithful;
  v.clause = "trivialD4(" + clause + ")";
  return v;
}

Verdict faithful_polydiff(const RamificationProfile& profile, int m, bool has_hyperelliptic_involution) {
  const int gx = profile_validate(profile);
  if (gx < 2) throw Error(ErrorCode::GenusTooSmall, "g_X = " + std::to_string(gx) + " < 2");
  if (m < 1) throw Error(ErrorCode::HypothesisViolated, "order m must be at least 1");
  // a double cover of the line is the hyperelliptic quotient
  if (profile.n == 2 && profile.gY == 0) has_hyperelliptic_involution = true;
  Verdict v;
  v.detail = nlohmann::json{{"n", profile.n}, {"gX", gx}, {"gY", profile.gY}, {"m", m},
                            {"hyperelliptic_involution", has_hyperelliptic_involution}};
  if (m == 1) {
    if (has_hyperelliptic_involution && !profile.p) {
      throw Error(ErrorCode::HypothesisViolated, "the characteristic is needed to decide m = 1");
    }
    if (profile.p) v.detail["p"] = *profile.p;
    if (has_hyperelliptic_involution && *profile.p == 2) {
      v.clause = "faithful1/p=2";
      v.result = profile.n == 2 ? VerdictResult::Trivial : VerdictResult::NonFaithfulNonTrivial;
    } else {
      v.clause = "faithful1";
      v.result = VerdictResult::Faithful;
    }
    return v;
  }
  if (has_hyperelliptic_involution && m == 2 && gx == 2) {
    if (profile.gY == 0 && profile.n == 2) {
      v.clause = "trivialPoly";
      v.result = VerdictResult::Trivial;
    } else {
      v.clause = "faithful2";
      v.result = VerdictResult::NonFaithfulNonTrivial;
    }
    return v;
  }
  v.clause = "faithful2";
  v.result = VerdictResult::Faithful;
  return v;
}

std::size_t matrix_group_order(const std::vector<Matrix>& generators, std::size_t max_order) {
  if (generators.empty()) return 1;
  const Matrix id = Matrix::identity(generators.front().field(), generators.front().rows());
  std::set<std::vector<std::vector<std::uint32_t>>> seen{id.encodings()};
  std::deque<Matrix> queue{id};
  while (!queue.empty()) {
    const Matrix cur = queue.front();
    queue.pop_front();
    for (const auto& g : generators) {
      Matrix next = cur * g;
      if (seen.insert(next.encodings()).second) {
        if (seen.size() > max_order) throw Error(ErrorCode::BoundExceeded, "matrix group exceeds the order bound");
        queue.push_back(std::move(next));
      }
    }
  }
  return seen.size();
}

bool verdict_matches_action(const Verdict& v, const ActionOnSpace& action, int n) {
  const bool all_identity = std::all_of(action.generators.begin(), action.generators.end(),
                                        [](const Matrix& m) { return m.is_identity(); });
  const auto order = static_cast<int>(matrix_group_order(action.generators));
  switch (v.result) {
    case VerdictResult::Trivial: return all_identity;
    case VerdictResult::Faithful: return order == n;
    case VerdictResult::NonFaithfulNonTrivial: return !all_identity && order < n;
    case VerdictResult::NonTrivial: return !all_identity;
    case VerdictResult::OutsideHypotheses: return true;
  }
  return false;
}

}  // namespace equicurve
