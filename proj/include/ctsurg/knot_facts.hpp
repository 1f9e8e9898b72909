#pragma once

// Ingested knot-type facts. Nothing here is ever computed from a diagram;
// every field is a recorded fact with three-valued semantics (present-true,
// present-false, unknown).

#include "ctsurg/exact.hpp"

#include <optional>
#include <string>

namespace ctsurg {

struct TorusParams {
  i64 p = 0, q = 0;  // positive, coprime; stored with p <= q

  i64 max_tb() const { return p * q - p - q; }
  friend bool operator==(const TorusParams&, const TorusParams&) = default;
};

struct KnotFacts {
  std::optional<i64> tau;               // Heegaard Floer concordance invariant
  std::optional<bool> slice;
  std::optional<bool> quasipositive;
  std::optional<i64> max_tb;
  std::optional<bool> bounds_lagrangian_disk;  // some tb=-1, rot=0 representative does
  std::optional<bool> decomposable;            // the disk can be built from births and pinches
  std::optional<bool> regular;                 // the disk is tangent to a Liouville field
  std::optional<TorusParams> torus;
  std::optional<bool> no_tight_positive_surgery;
  std::optional<i64> epsilon;  // stored only; no rule consumes it
};

// Enforces the implication chain decomposable => regular => disk and the
// torus max-tb formula. Throws input_error on violations.
void validate(const KnotFacts& facts);

}  // namespace ctsurg
