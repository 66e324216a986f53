#include "equicurve/goppa.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "equicurve/errors.hpp"

namespace equicurve {

GoppaCode goppa_build(const HyperellipticModel& model, const Divisor& d, const std::vector<Place>& points) {
  std::set<Place> seen;
  for (const auto& p : points) {
    if (!p.rational()) throw Error(ErrorCode::Parse, "evaluation point " + p.id() + " is not rational");
    if (!seen.insert(p).second) throw Error(ErrorCode::Parse, "evaluation point " + p.id() + " repeated");
    if (d.coeff(p) != 0) throw Error(ErrorCode::SupportOverlap, "evaluation point " + p.id() + " lies in supp D");
  }
  RRBasis basis = rr_basis(model, d);
  const int n = static_cast<int>(points.size());
  Matrix gen(model.field(), basis.dim(), n);
  for (int r = 0; r < basis.dim(); ++r) {
    for (int c = 0; c < n; ++c) {
      gen(r, c) = value_at(model, basis.basis[static_cast<std::size_t>(r)], points[static_cast<std::size_t>(c)]);
    }
  }
  const int k = gen.rank();
  return GoppaCode{model, d, points, std::move(basis), std::move(gen), k, std::nullopt};
}

std::vector<Place> evaluation_points(const HyperellipticModel& model, const Divisor& d) {
  std::vector<Place> out;
  for (const auto& p : rational_points(model)) {
    if (d.coeff(p) == 0) out.push_back(p);
  }
  return out;
}

int suggest_extension(const HyperellipticModel& model, const Divisor& d, int max_ext) {
  for (int e = 1; e <= max_ext; ++e) {
    const std::uint64_t q = model.field().q();
    std::uint64_t size = 1;
    for (int i = 0; i < e; ++i) size *= q;
    if (size > field_size_limit()) break;
    const HyperellipticModel big = model.base_change(e);
    const Divisor lifted = lift_divisor(big, d, FieldEmbedding(model.field(), big.field()));
    if (static_cast<int>(evaluation_points(big, lifted).size()) > d.degree()) return e;
  }
  throw Error(ErrorCode::BoundExceeded, "no extension within the bound has more than deg D points off supp D");
}

GoppaCode goppa_auto(const HyperellipticModel& model, const Divisor& d, int ext) {
  const HyperellipticModel big = model.base_change(ext);
  const Divisor lifted = lift_divisor(big, d, FieldEmbedding(model.field(), big.field()));
  return goppa_build(big, lifted, evaluation_points(big, lifted));
}

Vec encode(const GoppaCode& code, const Vec& message) {
  const GaloisField& F = code.model.field();
  Vec word(static_cast<std::size_t>(code.length()), F.zero());
  for (int r = 0; r < code.generator.rows(); ++r) {
    const Fq m = message[static_cast<std::size_t>(r)];
    if (m.is_zero()) continue;
    for (int c = 0; c < code.length(); ++c) word[static_cast<std::size_t>(c)] += m * code.generator(r, c);
  }
  return word;
}

int min_distance_bruteforce(const GoppaCode& code, std::uint64_t bound) {
  if (code.k == 0) throw Error(ErrorCode::NoCodewords, "the code is zero-dimensional");
  const GaloisField& F = code.model.field();
  const std::uint64_t q = F.q();
  std::uint64_t total = 1;
  for (int i = 0; i < code.k; ++i) {
    total *= q;
    if (total > bound) {
      throw Error(ErrorCode::BoundExceeded, "q^k exceeds the brute-force bound " + std::to_string(bound));
    }
  }
  const Matrix ech = code.generator.rref();
  const int n = code.length();
  std::vector<std::uint32_t> digits(static_cast<std::size_t>(code.k), 0);
  Vec word(static_cast<std::size_t>(n), F.zero());
  int best = n + 1;
  // odometer over messages; each step changes one digit and updates the word in place
  for (std::uint64_t step = 1; step < total; ++step) {
    int i = 0;
    while (digits[static_cast<std::size_t>(i)] + 1 == q) {
      const Fq old = F.element(digits[static_cast<std::size_t>(i)]);
      for (int c = 0; c < n; ++c) word[static_cast<std::size_t>(c)] -= old * ech(i, c);
      digits[static_cast<std::size_t>(i)] = 0;
      ++i;
    }
    const Fq delta = F.element(digits[static_cast<std::size_t>(i)] + 1) - F.element(digits[static_cast<std::size_t>(i)]);
    ++digits[static_cast<std::size_t>(i)];
    int weight = 0;
    for (int c = 0; c < n; ++c) {
      word[static_cast<std::size_t>(c)] += delta * ech(i, c);
      if (!word[static_cast<std::size_t>(c)].is_zero()) ++weight;
    }
    best = std::min(best, weight);
  }
  return best;
}

Vec permute_word(const Vec& word, const std::vector<int>& perm) {
  Vec out;
  out.reserve(word.size());
  for (int j : perm) out.push_back(word[static_cast<std::size_t>(j)]);
  return out;
}

PermutationAction code_action(const GoppaCode& code, const std::vector<CurveAutomorphism>& generators) {
  const HyperellipticModel& model = code.model;
  std::map<Place, int> index;
  for (std::size_t i = 0; i < code.points.size(); ++i) index.emplace(code.points[i], static_cast<int>(i));

  PermutationAction out;
  out.rr_action = action_on_rr(model, generators, code.basis);
  const GaloisField& F = model.field();
  const int n = code.length();
  for (const auto& g : generators) {
    std::vector<int> perm;
    for (const auto& p : code.points) {
      const auto it = index.find(place_image(model, g, p));
      if (it == index.end()) throw Error(ErrorCode::NotStable, "E is not stable under " + g.to_string());
      perm.push_back(it->second);
    }
    Matrix permuted(F, code.generator.rows(), n);
    for (int r = 0; r < code.generator.rows(); ++r) {
      const Vec row = permute_word(code.generator.row(r), perm);
      for (int c = 0; c < n; ++c) permuted(r, c) = row[static_cast<std::size_t>(c)];
    }
    if (vstack({code.generator, permuted}).rank() != code.k) out.stable = false;
    if (!(permuted == code.generator)) out.trivial_on_code = false;
    out.permutations.push_back(std::move(perm));
  }

  const auto group = generate_group(model, generators);
  out.group_order = static_cast<int>(group.size());
  out.rr_faithful = static_cast<int>(matrix_group_order(out.rr_action.generators)) == out.group_order;

  const int deg = code.divisor.degree();
  Verdict& v = out.certificate;
  v.detail = nlohmann::json{{"E", n}, {"degD", deg}, {"n", out.group_order}};
  if (n <= deg) {
    v.result = VerdictResult::OutsideHypotheses;
    v.clause = "evaluation";
    v.detail["reason"] = "|E| <= deg D";
    return out;
  }
  const ConcreteCover cover = profile_from_curve(model, group);
  const Verdict sufficient = faithful_sufficient(cover.profile, invariant_spec(cover, cover.lift(code.divisor)));
  v.detail["rr"] = sufficient.to_json();
  v.result = sufficient.result == VerdictResult::Faithful ? VerdictResult::Faithful : VerdictResult::OutsideHypotheses;
  v.clause = "evaluation+" + sufficient.clause;
  return out;
}

nlohmann::json code_to_json(const GoppaCode& code) {
  nlohmann::json j;
  j["field"] = code.model.field().name();
  j["q"] = code.model.field().q();
  j["n"] = code.length();
  j["k"] = code.k;
  if (code.d) j["d"] = *code.d;
  j["degD"] = code.divisor.degree();
  std::vector<std::string> ids;
  for (const auto& p : code.points) ids.push_back(p.id());
  j["points"] = ids;
  j["generator"] = code.generator.encodings();
  return j;
}

std::string code_to_alist(const GoppaCode& code) {
  std::ostringstream os;
  os << code.length() << " " << code.k << " " << code.model.field().q() << "\n";
  for (const auto& row : code.generator.encodings()) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? " " : "") << row[i];
    os << "\n";
  }
  return os.str();
}

}  // namespace equicurve
