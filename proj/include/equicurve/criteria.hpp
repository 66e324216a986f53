#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "equicurve/matrix.hpp"
#include "equicurve/ramification.hpp"
#include "equicurve/rrspace.hpp"

namespace equicurve {

enum class VerdictResult { Trivial, Faithful, NonFaithfulNonTrivial, NonTrivial, OutsideHypotheses };

std::string result_name(VerdictResult r);

// result plus the clause that decided it and the quantities it was decided on.
struct Verdict {
  VerdictResult result = VerdictResult::OutsideHypotheses;
  std::string clause;
  nlohmann::json detail = nlohmann::json::object();

  nlohmann::json to_json() const;
};

// Trivial iff (n-1) deg D = n (g_X - g_Y - sum_Q <n_Q/e_Q>), exactly. Needs deg D > 2g_X - 2.
Verdict trivial_action_iff(const RamificationProfile& profile, const InvariantDivisorSpec& spec);
// deg D >= 2g_X: trivial iff deg D = 2g_X, n = 2, g_Y = 0 and n_P even at every ramification point.
Verdict trivial_deg_ge_2g(const RamificationProfile& profile, const InvariantDivisorSpec& spec);
// deg D = 2g_X - 1: trivial iff g_Y = 0 and (n = 2 with exactly one odd ramified n_P, or
// n = 3, g_X = 2 with every ramified n_P divisible by 3).
Verdict trivial_deg_2gm1(const RamificationProfile& profile, const InvariantDivisorSpec& spec);
// Sufficient conditions (a)-(d) for a faithful action on L(D); OutsideHypotheses when none holds.
Verdict faithful_sufficient(const RamificationProfile& profile, const InvariantDivisorSpec& spec);
// Action on H^0(Omega^m). p is required for m = 1 when G contains a hyperelliptic involution.
Verdict faithful_polydiff(const RamificationProfile& profile, int m, bool has_hyperelliptic_involution);

// Order of the matrix group generated by the given matrices; throws BoundExceeded past max_order.
std::size_t matrix_group_order(const std::vector<Matrix>& generators, std::size_t max_order = 1 << 16);
// Whether a verdict agrees with the matrices of a group of order n:
// Trivial <=> all identity, Faithful <=> generated group of order n.
bool verdict_matches_action(const Verdict& v, const ActionOnSpace& action, int n);

}  // namespace equicurve
