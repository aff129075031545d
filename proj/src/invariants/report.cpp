#include "common.hpp"

namespace factorinv {

namespace {

void add_common(InvariantReport& r, const AffineSemigroup& m) {
  const bool half_factorial = is_half_factorial(m);
  r.values["embedding_dimension"] = Integer(m.embedding_dimension());
  r.values["half_factorial"] = half_factorial;
  r.values["elasticity"] = elasticity(m).value;
  r.values["equal_catenary"] = equal_catenary(m).value;
  r.values["homogeneous_catenary"] = homogeneous_catenary(m).value;
  r.values["monotone_catenary"] = monotone_catenary(m).value;
  if (!half_factorial) {
    r.values["delta_min"] = *delta_min(m);
    r.values["delta_max"] = delta_max(m)->value;
  }
}

}  // namespace

InvariantReport invariant_report(const AffineSemigroup& m) {
  InvariantReport r;
  add_common(r, m);
  r.values["catenary"] = catenary(m).value;
  r.values["tame"] = tame(m).value;
  r.values["omega"] = omega(m).value;
  return r;
}

InvariantReport invariant_report(const NumericalSemigroup& s) {
  InvariantReport r;
  add_common(r, s.affine());
  r.values["catenary"] = catenary(s).value;
  r.values["tame"] = tame(s).value;
  r.values["omega"] = omega(s).value;
  r.values["multiplicity"] = Integer(s.multiplicity());
  r.values["frobenius_number"] = Integer(s.frobenius_number());
  r.values["max_denumerant"] = max_denumerant(s).value;
  return r;
}

}  // namespace factorinv
