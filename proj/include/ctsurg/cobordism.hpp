#pragma once

// The 4-manifold side of a surgery diagram: a symmetric integer linking
// matrix, one rotation number per 2-handle, and the count of contact (+1)
// components entering the d3 correction.

#include "ctsurg/exact.hpp"

#include <iosfwd>

namespace ctsurg {

struct Cobordism {
  IntMatrix Q;     // symmetric; dim = number of 2-handles = Euler characteristic
  IntVector rot;   // rotation numbers, one per handle
  int plus_count = 0;

  Eigen::Index handles() const { return Q.rows(); }
};

// Validates symmetry, matching dimensions and plus_count >= 0.
Cobordism make_cobordism(IntMatrix Q, IntVector rot, int plus_count);

// Diagram file: dimension m, then the m x m matrix rows, then the rotation
// vector, then the plus-count; decimal integers, any whitespace.
Cobordism read_diagram(std::istream& in);
Cobordism read_diagram_file(const std::string& path);
void write_diagram(std::ostream& out, const Cobordism& cob);

}  // namespace ctsurg
