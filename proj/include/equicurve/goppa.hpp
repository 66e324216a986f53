#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "equicurve/criteria.hpp"
#include "equicurve/rrspace.hpp"

namespace equicurve {

// C(D, E): evaluations of the L(D) basis at the points of E, one generator row per basis function.
struct GoppaCode {
  HyperellipticModel model;
  Divisor divisor;
  std::vector<Place> points;
  RRBasis basis;
  Matrix generator;
  int k = 0;
  std::optional<int> d;

  int length() const { return static_cast<int>(points.size()); }
};

// Throws SupportOverlap when E meets supp D, Parse for repeated or non-rational points,
// BoundExceeded when deg D is over the Riemann-Roch cap.
GoppaCode goppa_build(const HyperellipticModel& model, const Divisor& d, const std::vector<Place>& points);

// All degree-1 places of the model outside supp D, in code order.
std::vector<Place> evaluation_points(const HyperellipticModel& model, const Divisor& d);
// Smallest extension degree e <= max_ext with more than deg D points off the support over GF(q^e).
int suggest_extension(const HyperellipticModel& model, const Divisor& d, int max_ext = 6);
// Base change by ext and evaluate at every rational point off the support.
GoppaCode goppa_auto(const HyperellipticModel& model, const Divisor& d, int ext);

constexpr std::uint64_t kDefaultDistanceBound = std::uint64_t{1} << 22;
// Exact minimum weight over all nonzero codewords. Throws NoCodewords, BoundExceeded.
int min_distance_bruteforce(const GoppaCode& code, std::uint64_t bound = kDefaultDistanceBound);

struct PermutationAction {
  // permutations[g][i] = index in E of the image of E[i]; the permuted word is c'_i = c_{perm[i]}
  std::vector<std::vector<int>> permutations;
  bool stable = true;
  bool trivial_on_code = true;
  int group_order = 1;
  ActionOnSpace rr_action;
  bool rr_faithful = false;
  // injectivity of G -> Aut(C): |E| > deg D together with a sufficient condition on L(D)
  Verdict certificate;
};

// Throws NotStable when E is not mapped to itself, NotInvariant when D is not invariant.
PermutationAction code_action(const GoppaCode& code, const std::vector<CurveAutomorphism>& generators);

// c'_i = c_{perm[i]}
Vec permute_word(const Vec& word, const std::vector<int>& perm);
Vec encode(const GoppaCode& code, const Vec& message);

nlohmann::json code_to_json(const GoppaCode& code);
// "n k q" on the first line, then one generator row per line.
std::string code_to_alist(const GoppaCode& code);

}  // namespace equicurve
