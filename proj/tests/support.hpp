#pragma once

#include <optional>

#include "equicurve/curve.hpp"
#include "equicurve/errors.hpp"

template <class F>
std::optional<equicurve::ErrorCode> error_of(F&& f) {
  try {
    f();
  } catch (const equicurve::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

// div(u) + D >= 0, checked over an extension where div(u) is supported on rational places
inline bool in_riemann_roch_space(const equicurve::HyperellipticModel& model, const equicurve::FunctionRep& u,
                                  const equicurve::Divisor& d) {
  using namespace equicurve;
  try {
    return (principal_divisor(model, u) + d).is_effective();
  } catch (const NeedsExtensionError& e) {
    const HyperellipticModel big = model.base_change(e.degree());
    const FieldEmbedding emb(model.field(), big.field());
    const FunctionRep v = big.function(u.a().map(emb), u.b().map(emb), u.den().map(emb));
    return (principal_divisor(big, v) + lift_divisor(big, d, emb)).is_effective();
  }
}
