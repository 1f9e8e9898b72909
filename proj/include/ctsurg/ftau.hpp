#pragma once

// f(t): the minimum of sum d_i^2 over tuples of non-negative integers with
// sum (d_i^2 - d_i) >= 2t. Entries 0 and 1 contribute nothing to the
// constraint and only grow the objective, so only d >= 2 matters, which
// gives the dynamic program
//   g(t) = 0 for t <= 0,   g(t) = min_{d >= 2} d^2 + g(t - d(d-1)/2),
// with d capped at the least value whose triangular weight reaches t.

#include "ctsurg/exact.hpp"

#include <vector>

namespace ctsurg {

// Exact minimum; rejects negative t and arguments beyond 10^6 (the memo
// table is linear in t). The table is append-only and guarded for
// concurrent callers.
i64 f_of_tau(i64 t);

// One optimal tuple (descending, entries >= 2); empty for t = 0.
std::vector<i64> f_witness(i64 t);

// 2t + ceil((sqrt(8t+1)+1)/2), exact integer arithmetic. The relaxation
// behind the bound assumes t >= 1: at t = 0 the formula gives 1 > f(0) = 0,
// so the value is reported but never asserted as a lower bound there.
i64 f_lower_bound(i64 t);

// 2*tau + sum |d_i| - sum d_i^2 <= 2*genus: the adjunction-style inequality
// for a surface in a negative-definite trace, specialized to classes with
// square -1. Used by the tests to certify f's witnesses independently.
bool slice_genus_bound_check(const std::vector<i64>& d, i64 tau, i64 genus);

}  // namespace ctsurg
