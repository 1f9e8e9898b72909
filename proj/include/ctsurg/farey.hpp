#pragma once

// The Farey tessellation of the disk: slopes label the boundary circle, and
// two slopes span an edge exactly when their homology vectors form a basis
// of Z^2 (|p*q' - q*p'| = 1).
//
// Circle convention used throughout: travelling CLOCKWISE from 0 one passes
// the positive slopes in increasing order, then ∞, then the negative slopes
// in increasing order, and returns to 0. Arcs are directed and carry an
// openness flag per endpoint.

#include "ctsurg/slope.hpp"

#include <utility>

namespace ctsurg {

enum class Orientation { positive, negative, degenerate };

enum class ArcDirection { clockwise, counterclockwise };

// Which endpoints belong to the arc. "Half-open at x" excludes x.
enum class ArcOpenness { open, half_open_at_from, half_open_at_to, closed };

enum class ArcEnd { nearest_to_from, nearest_to_to };

class CircularArc {
 public:
  CircularArc(Slope from, Slope to, ArcDirection direction, ArcOpenness openness);

  const Slope& from() const { return from_; }
  const Slope& to() const { return to_; }
  ArcDirection direction() const { return direction_; }
  ArcOpenness openness() const { return openness_; }

  bool includes_from() const {
    return openness_ == ArcOpenness::closed || openness_ == ArcOpenness::half_open_at_to;
  }
  bool includes_to() const {
    return openness_ == ArcOpenness::closed || openness_ == ArcOpenness::half_open_at_from;
  }

 private:
  Slope from_, to_;
  ArcDirection direction_;
  ArcOpenness openness_;
};

// True iff the homology vectors of a and b form a basis of Z^2.
bool is_edge(const Slope& a, const Slope& b);

// The Farey child (p+p')/(q+q') of an edge pair, computed on normal forms.
// Rejects non-neighbors (the vector sum of non-neighbors is not a child).
Slope mediant(const Slope& a, const Slope& b);

// The unique pair (a, b) with mediant(a, b) = s and edges to s, in numeric
// order (∞ greatest). The tessellation roots 0 and ∞ are rejected.
std::pair<Slope, Slope> parents(const Slope& s);

// Cyclic orientation of a triple on the boundary circle: positive when
// (a, b, c) agree with the clockwise traversal described above, degenerate
// when two arguments coincide.
Orientation circular_order(const Slope& a, const Slope& b, const Slope& c);

// -1/0/+1: position of b relative to a in the clockwise traversal from 0.
int circular_compare(const Slope& a, const Slope& b);

bool contains(const CircularArc& arc, const Slope& s);

// Among the Farey neighbors of r lying on the arc, the one nearest the
// requested endpoint. Fails (input_error) when the arc holds no neighbor of
// r, and when the requested endpoint is r itself (neighbors accumulate
// there, so no extremal element exists).
Slope extremal_neighbor(const Slope& r, const CircularArc& arc, ArcEnd end);

// |p - q| = 1, i.e. r spans an edge with the slope 1.
bool has_edge_to_one(const Slope& r);

}  // namespace ctsurg
