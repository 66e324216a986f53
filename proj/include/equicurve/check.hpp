#pragma once

#include <cstdint>
#include <vector>

#include "equicurve/json_io.hpp"

namespace equicurve {

// G-orbits of places: the ramification points, the places above infinity, and the orbits of
// the first max_points rational points of cover.model.
std::vector<std::vector<Place>> place_orbits(const ConcreteCover& cover, int max_points = 24);

// Invariant divisors with min_deg <= deg D <= max_deg, built from random orbit coefficients
// and a multiple of the orbit above infinity. Deterministic in the seed.
std::vector<Divisor> random_invariant_divisors(const ConcreteCover& cover, int count, int min_deg, int max_deg,
                                               std::uint64_t seed);

struct CheckOptions {
  std::uint64_t seed = 1;
  int divisor_samples = 24;
  int max_m = 5;
};

struct CheckReport {
  json report;
  bool ok = true;
};

// Hurwitz bookkeeping, Riemann-Roch and invariant dimensions on a divisor sweep, polydifferential
// bases and actions for m = 1..max_m, criteria against action matrices, deformation cross-check.
CheckReport run_check(const CurveInput& curve, const CheckOptions& options = {});

}  // namespace equicurve
