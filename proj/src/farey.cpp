#include "ctsurg/farey.hpp"

#include <array>
#include <cstdlib>
#include <numeric>

namespace ctsurg {

namespace {

i128 iabs(i128 v) { return v < 0 ? -v : v; }

// Clockwise rank tier: 0, positives, ∞, negatives, back to 0.
int tier(const Slope& s) {
  if (s.is_zero()) return 0;
  if (s.is_infinite()) return 2;
  return s.p() > 0 ? 1 : 3;
}

// Extended Euclid: returns (x, y) with a*x + b*y = gcd(a, b), a, b >= 0.
std::pair<i64, i64> extgcd(i64 a, i64 b) {
  i64 x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    i64 q = a / b;
    std::tie(a, b) = std::make_pair(b, a - q * b);
    std::tie(x0, x1) = std::make_pair(x1, x0 - q * x1);
    std::tie(y0, y1) = std::make_pair(y1, y0 - q * y1);
  }
  return {x0, y0};
}

// A homology vector (u, v) with cross(r, (u,v)) = p*v - q*u = 1.
std::pair<i64, i64> base_neighbor(const Slope& r) {
  i64 p = r.p(), q = r.q();
  bool flip = p < 0;
  if (flip) p = -p;
  auto [x, y] = extgcd(p, q);  // p*x + q*y = 1
  i64 v = x, u = -y;
  if (flip) v = -v;  // restore p*v - q*u = 1 for the original sign
  return {u, v};
}

Slope slope_from_raw(i128 u, i128 v) {
  if (v < 0) {
    u = -u;
    v = -v;
  }
  return Slope(checked_i64(u, "farey neighbor"), checked_i64(v, "farey neighbor"));
}

struct CanonicalArc {
  Slope from, to;
  bool from_included, to_included;
};

CanonicalArc canonical_clockwise(const CircularArc& arc) {
  if (arc.direction() == ArcDirection::clockwise)
    return {arc.from(), arc.to(), arc.includes_from(), arc.includes_to()};
  return {arc.to(), arc.from(), arc.includes_to(), arc.includes_from()};
}

}  // namespace

CircularArc::CircularArc(Slope from, Slope to, ArcDirection direction, ArcOpenness openness)
    : from_(from), to_(to), direction_(direction), openness_(openness) {
  if (from_ == to_) throw input_error("degenerate arc: endpoints coincide");
}

bool is_edge(const Slope& a, const Slope& b) { return iabs(cross(a, b)) == 1; }

Slope mediant(const Slope& a, const Slope& b) {
  if (!is_edge(a, b))
    throw input_error("mediant of " + to_string(a) + " and " + to_string(b) +
                      ": not a tessellation edge");
  return slope_from_raw(static_cast<i128>(a.p()) + b.p(), static_cast<i128>(a.q()) + b.q());
}

std::pair<Slope, Slope> parents(const Slope& s) {
  if (s.is_zero() || s.is_infinite())
    throw input_error("the tessellation roots 0 and inf have no parents");
  Slope a(0, 1), b(0, 1);
  if (s.is_integer()) {
    a = Slope(s.p() - 1, 1);
    b = Slope::infinity();
  } else {
    // Solve u*q - v*p = 1 with 1 <= v <= q-1; the complementary summand is
    // the other parent.
    i64 p = s.p(), q = s.q();
    i64 pm = ((p % q) + q) % q;
    auto [x, y] = extgcd(pm, q);  // pm*x + q*y = 1
    (void)y;
    i64 v = ((-x) % q + q) % q;  // v*p = -1 (mod q)
    i128 u = (i128(1) + i128(v) * p) / q;
    a = slope_from_raw(u, v);
    b = slope_from_raw(i128(p) - u, i128(q) - v);
  }
  if (numeric_less(b, a)) std::swap(a, b);
  return {a, b};
}

int circular_compare(const Slope& a, const Slope& b) {
  int ta = tier(a), tb = tier(b);
  if (ta != tb) return ta < tb ? -1 : 1;
  if (a == b) return 0;
  return numeric_less(a, b) ? -1 : 1;  // within a tier the numeric order applies
}

Orientation circular_order(const Slope& a, const Slope& b, const Slope& c) {
  if (a == b || b == c || a == c) return Orientation::degenerate;
  bool ab = circular_compare(a, b) < 0;
  bool bc = circular_compare(b, c) < 0;
  bool ca = circular_compare(c, a) < 0;
  // Cyclically ascending iff at least two of the three steps ascend.
  int ups = int(ab) + int(bc) + int(ca);
  return ups >= 2 ? Orientation::positive : Orientation::negative;
}

bool contains(const CircularArc& arc, const Slope& s) {
  CanonicalArc cw = canonical_clockwise(arc);
  if (s == cw.from) return cw.from_included;
  if (s == cw.to) return cw.to_included;
  return circular_order(cw.from, s, cw.to) == Orientation::positive;
}

Slope extremal_neighbor(const Slope& r, const CircularArc& arc, ArcEnd end) {
  CanonicalArc cw = canonical_clockwise(arc);
  bool toward_from = (end == ArcEnd::nearest_to_from);
  if (arc.direction() == ArcDirection::counterclockwise) toward_from = !toward_from;
  const Slope target = toward_from ? cw.from : cw.to;
  const bool target_included = toward_from ? cw.from_included : cw.to_included;
  if (target == r)
    throw input_error("neighbors of " + to_string(r) +
                      " accumulate at the arc endpoint; no extremal neighbor exists");

  // Neighbors of r are exactly s_k = base + k*(p, q); increasing k sweeps
  // the circle clockwise once, from just clockwise of r around to just
  // counterclockwise of it. The crossing index of the target endpoint is the
  // rational k0 below; the extremal neighbor toward the target sits at the
  // adjacent integer.
  auto [u0, v0] = base_neighbor(r);
  i128 a = static_cast<i128>(target.p()) * v0 - static_cast<i128>(target.q()) * u0;
  i128 b = cross(target, r);  // nonzero since target != r
  i128 kf = floor_div(-a, b);
  bool integral = ((-a) % b == 0);

  i128 k;
  if (toward_from) {
    k = integral ? (target_included ? kf : kf + 1) : kf + 1;
  } else {
    k = integral ? (target_included ? kf : kf - 1) : kf;
  }

  constexpr i128 k_limit = i128(1) << 63;
  if (k > k_limit || k < -k_limit)
    throw std::overflow_error("extremal neighbor exceeds the representable slope range");
  Slope s = slope_from_raw(u0 + k * r.p(), v0 + k * r.q());
  if (!contains(arc, s))
    throw input_error("arc contains no Farey neighbor of " + to_string(r));
  return s;
}

bool has_edge_to_one(const Slope& r) {
  return iabs(static_cast<i128>(r.p()) - r.q()) == 1;
}

}  // namespace ctsurg
