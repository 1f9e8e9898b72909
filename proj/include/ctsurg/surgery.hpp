#pragma once

// Contact surgery coefficients on Legendrian knots and the decomposition of
// a positive contact (r)-surgery into contact (±1)-surgeries, with every
// stabilization taken negative. Smooth coefficient = tb + r.

#include "ctsurg/cobordism.hpp"
#include "ctsurg/slope.hpp"

#include <string>
#include <vector>

namespace ctsurg {

struct LegendrianRep {
  std::string knot_id;
  i64 tb = 0;
  i64 rot = 0;
};

struct SurgeryComponent {
  int contact_sign = -1;  // +1 or -1
  i64 tb = 0;
  i64 rot = 0;
  i64 stabilizations = 0;  // all negative: each one maps (tb, rot) -> (tb-1, rot-1)
  int parent = -1;         // index of the component this is a push-off of; -1 = the original knot

  i64 smooth_framing() const { return tb + contact_sign; }
};

struct SurgeryDiagram {
  LegendrianRep original;
  Slope coefficient;
  std::vector<SurgeryComponent> components;

  int plus_count() const;
};

// tb + r as a normalized slope; r = 0 is rejected (contact 0-surgery is
// excluded), r = ∞ maps to ∞.
Slope smooth_coefficient(const LegendrianRep& rep, const Slope& r);

// Negative continued fraction n/d = a1 - 1/(a2 - 1/(...)) with every
// coefficient <= -2; requires n/d < -1. Exposed for the tests.
std::vector<i64> negative_continued_fraction(i64 num, i64 den);

// Decomposition of contact (r)-surgery, r > 0:
//   - a = ceil(q/p) push-offs with contact (+1), then
//   - a chain of contact (-1) push-offs whose stabilization counts come from
//     the negative continued fraction of the residual coefficient p/(q-ap),
//     the first entry corrected from |a1+2| to |a1+1| so that r = n yields
//     the standard picture (one stabilized push-off, then n-2 plain ones).
// Rejects r <= 0 and r = ∞.
SurgeryDiagram decompose(const LegendrianRep& rep, const Slope& r);

// Linking matrix of the 2-handle attachment: Q_ii = tb_i + sign_i, and for
// i < j in the push-off chain Q_ij = tb_i (a push-off of K links K and every
// other push-off of K exactly tb(K) times). Also carries the rotation vector
// and the number of (+1) components.
Cobordism linking_matrix(const SurgeryDiagram& diagram);

}  // namespace ctsurg
