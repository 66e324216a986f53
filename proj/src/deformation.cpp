#include "equicurve/deformation.hpp"

#include "equicurve/errors.hpp"
#include "equicurve/rrspace.hpp"

namespace equicurve {

GroupRepresentation make_representation(const GaloisField& field, int dim, std::vector<Matrix> generators,
                                        std::optional<int> group_order) {
  for (const auto& g : generators) {
    if (g.rows() != dim || g.cols() != dim) throw Error(ErrorCode::Parse, "generator has the wrong size");
    if (&g.field() != &field) throw Error(ErrorCode::Parse, "generator over a different field");
    if (!g.inverse()) throw Error(ErrorCode::Parse, "generator is singular");
  }
  return GroupRepresentation{&field, dim, std::move(generators), group_order};
}

DeformationDim deformation_dim(const RamificationProfile& profile) {
  const int gx = profile_validate(profile);
  if (gx < 2) throw Error(ErrorCode::GenusTooSmall, "g_X = " + std::to_string(gx) + " < 2");
  DeformationDim out;
  out.dim = 3 * profile.gY - 3;
  for (const auto& b : profile.branch) out.dim += floor_div(2 * b.delta(), b.e);
  out.crosscheck = invariant_dim_polydiff(profile, 2);
  return out;
}

std::pair<int, int> inv_coinv_dims(const GroupRepresentation& rep) {
  if (rep.dim == 0) return {0, 0};
  if (rep.generators.empty()) return {rep.dim, rep.dim};
  const Matrix id = Matrix::identity(*rep.field, rep.dim);
  std::vector<Matrix> rows;
  std::vector<Matrix> cols;
  for (const auto& g : rep.generators) {
    rows.push_back(g - id);
    cols.push_back((g - id).transpose());
  }
  // sum of the images (g - 1) M is the column space of [g_1 - 1 | g_2 - 1 | ...]
  return {rep.dim - vstack(rows).rank(), rep.dim - vstack(cols).rank()};
}

GroupRepresentation dual_representation(const GroupRepresentation& rep) {
  GroupRepresentation out{rep.field, rep.dim, {}, rep.group_order};
  for (const auto& g : rep.generators) {
    const auto inv = g.inverse();
    if (!inv) throw Error(ErrorCode::Parse, "generator is singular");
    out.generators.push_back(inv->transpose());
  }
  return out;
}

bool check_duality(const GroupRepresentation& rep) {
  return inv_coinv_dims(rep).second == inv_coinv_dims(dual_representation(rep)).first;
}

std::string HypothesisReport::status() const {
  if (!samples_equal) return "fails";
  if (proved_by_shape) return "proved";
  return samples.empty() ? "unchecked" : "sampled";
}

HypothesisReport check_groups_hypothesis(const std::vector<GroupRepresentation>& reps,
                                         const std::optional<GroupShape>& shape, int p) {
  HypothesisReport out;
  for (const auto& rep : reps) {
    const auto dims = inv_coinv_dims(rep);
    out.samples.push_back(dims);
    if (dims.first != dims.second) out.samples_equal = false;
  }
  if (shape && shape->normal_order >= 1 && shape->cyclic_quotient >= 1 && shape->normal_order % p != 0) {
    out.proved_by_shape = true;
  }
  return out;
}

}  // namespace equicurve
