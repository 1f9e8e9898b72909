#include "ctsurg/d3.hpp"

namespace ctsurg {

namespace {

// (c^2 - 3*sigma - 2*chi)/4 with all pieces computed exactly.
Rational d3_formula(const Cobordism& cob, Rational* c2_out, i64* sigma_out) {
  const Rational c2 = cob.handles() == 0 ? Rational(0) : c_squared(cob.Q, cob.rot);
  const i64 sig = signature(cob.Q);
  const i64 chi = cob.handles();
  if (c2_out) *c2_out = c2;
  if (sigma_out) *sigma_out = sig;
  return (c2 - Rational(3 * sig) - Rational(2 * chi)) / Rational(4);
}

}  // namespace

D3Result d3(const Cobordism& cob) {
  D3Result res;
  res.h1_order = h1_order(cob.Q);
  if (res.h1_order == 0)
    throw input_error("boundary is not a rational homology sphere (singular linking matrix)");
  res.chi = cob.handles();
  res.plus_count = cob.plus_count;
  res.value = d3_formula(cob, &res.c_squared, &res.sigma) + Rational(cob.plus_count);
  return res;
}

Rational d3_delta(const Cobordism& cob, const Rational& d3_initial) {
  if (cob.plus_count != 0)
    throw input_error("d3_delta applies to Stein cobordisms only (plus-count must be 0)");
  if (cob.handles() > 0 && h1_order(cob.Q) == 0)
    throw input_error("boundary is not a rational homology sphere (singular linking matrix)");
  return d3_initial + d3_formula(cob, nullptr, nullptr);
}

}  // namespace ctsurg
