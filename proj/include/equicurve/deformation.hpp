#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "equicurve/matrix.hpp"
#include "equicurve/ramification.hpp"

namespace equicurve {

// A finite-dimensional k[G]-module given by the matrices of a generating set.
struct GroupRepresentation {
  const GaloisField* field = nullptr;
  int dim = 0;
  std::vector<Matrix> generators;
  std::optional<int> group_order;
};

// Throws Parse for singular or mis-sized matrices.
GroupRepresentation make_representation(const GaloisField& field, int dim, std::vector<Matrix> generators,
                                        std::optional<int> group_order = std::nullopt);

struct DeformationDim {
  int dim = 0;         // 3 g_Y - 3 + sum_Q floor(2 delta_Q / e_Q)
  int crosscheck = 0;  // invariant quadratic differentials
};
// Throws GenusTooSmall.
DeformationDim deformation_dim(const RamificationProfile& profile);

// (dim M^G, dim M_G)
std::pair<int, int> inv_coinv_dims(const GroupRepresentation& rep);
// The contragredient module: g -> (g^{-1})^T.
GroupRepresentation dual_representation(const GroupRepresentation& rep);
// dim M_G == dim (M^*)^G.
bool check_duality(const GroupRepresentation& rep);

// |N| for a normal subgroup N with cyclic quotient of the given order.
struct GroupShape {
  int normal_order = 1;
  int cyclic_quotient = 1;
};

struct HypothesisReport {
  std::vector<std::pair<int, int>> samples;
  bool samples_equal = true;
  bool proved_by_shape = false;
  // "proved" | "sampled" | "unchecked" (no samples) | "fails"
  std::string status() const;
};

// Checks dim M^G = dim M_G on each sample; p not dividing |N| proves it for all modules.
HypothesisReport check_groups_hypothesis(const std::vector<GroupRepresentation>& reps,
                                         const std::optional<GroupShape>& shape, int p);

}  // namespace equicurve
