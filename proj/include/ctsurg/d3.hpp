#pragma once

// The d3 homotopy invariant of the contact structure produced by a surgery
// diagram: (c^2 - 3*sigma - 2*chi)/4 plus one correction per contact (+1)
// component, and its change across a Stein cobordism.

#include "ctsurg/cobordism.hpp"
#include "ctsurg/linalg.hpp"

namespace ctsurg {

struct D3Result {
  Rational value;
  Rational c_squared;
  i64 sigma = 0;
  i64 chi = 0;
  Integer h1_order;  // |det Q|; 0 would mean b1 > 0, which d3 rejects
  int plus_count = 0;
};

// Requires det Q != 0 (propagates the non-rational-homology-sphere error).
// When plus_count = 1 the correction term is the literal "+1"; other counts
// use the extended "+plus_count" convention.
D3Result d3(const Cobordism& cob);

// d3 change across a Stein 2-handle cobordism between rational homology
// spheres: initial + (c^2 - 3*sigma - 2*chi)/4. Rejects plus_count != 0.
Rational d3_delta(const Cobordism& cob, const Rational& d3_initial);

}  // namespace ctsurg
