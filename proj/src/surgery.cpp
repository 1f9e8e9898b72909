#include "ctsurg/surgery.hpp"

namespace ctsurg {

int SurgeryDiagram::plus_count() const {
  int n = 0;
  for (const auto& c : components) n += (c.contact_sign > 0);
  return n;
}

Slope smooth_coefficient(const LegendrianRep& rep, const Slope& r) {
  if (r.is_zero()) throw input_error("contact (0)-surgery is excluded");
  if (r.is_infinite()) return r;
  i128 num = static_cast<i128>(rep.tb) * r.q() + r.p();
  return Slope(checked_i64(num, "smooth coefficient"), r.q());
}

std::vector<i64> negative_continued_fraction(i64 num, i64 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (den == 0 || num >= -den)
    throw input_error("negative continued fraction requires a value < -1");
  std::vector<i64> out;
  // Invariant: num/den < -1, den > 0. Each step: a = floor(num/den) <= -2,
  // then num/den -> den' / (num - a*den) renormalized; denominators strictly
  // decrease, so this terminates.
  while (true) {
    i64 a = static_cast<i64>(floor_div(num, den));
    out.push_back(a);
    i64 t = num - a * den;  // in [0, den)
    if (t == 0) break;
    num = -den;
    den = t;
  }
  return out;
}

SurgeryDiagram decompose(const LegendrianRep& rep, const Slope& r) {
  if (r.is_infinite() || r.sign() <= 0)
    throw input_error("decompose requires a positive rational surgery coefficient");
  const i64 p = r.p(), q = r.q();

  SurgeryDiagram diagram{rep, r, {}};
  const i64 a = (q + p - 1) / p;  // ceil(q/p) >= 1
  for (i64 i = 0; i < a; ++i) {
    SurgeryComponent c;
    c.contact_sign = +1;
    c.tb = rep.tb;
    c.rot = rep.rot;
    c.stabilizations = 0;
    c.parent = static_cast<int>(i) - 1;
    diagram.components.push_back(c);
  }

  const i64 residual_den = q - a * p;
  if (residual_den != 0) {
    std::vector<i64> cf = negative_continued_fraction(p, residual_den);
    i64 tb = rep.tb, rot = rep.rot;
    for (std::size_t i = 0; i < cf.size(); ++i) {
      i64 stabs = (i == 0) ? -(cf[i] + 1) : -(cf[i] + 2);
      SurgeryComponent c;
      c.contact_sign = -1;
      c.stabilizations = stabs;
      c.tb = tb - stabs;
      c.rot = rot - stabs;
      c.parent = static_cast<int>(diagram.components.size()) - 1;
      diagram.components.push_back(c);
      tb = c.tb;
      rot = c.rot;
    }
  }
  return diagram;
}

Cobordism linking_matrix(const SurgeryDiagram& diagram) {
  const auto n = static_cast<Eigen::Index>(diagram.components.size());
  IntMatrix Q(n, n);
  IntVector rot(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& ci = diagram.components[i];
    Q(i, i) = ci.smooth_framing();
    rot(i) = ci.rot;
    for (Eigen::Index j = i + 1; j < n; ++j) {
      Q(i, j) = ci.tb;
      Q(j, i) = ci.tb;
    }
  }
  return make_cobordism(std::move(Q), std::move(rot), diagram.plus_count());
}

}  // namespace ctsurg
