#include "ctsurg/verdict.hpp"

#include "ctsurg/ftau.hpp"

#include <algorithm>
#include <numeric>

namespace ctsurg {

void validate(const KnotFacts& facts) {
  auto is_true = [](const std::optional<bool>& f) { return f.has_value() && *f; };
  auto is_false = [](const std::optional<bool>& f) { return f.has_value() && !*f; };
  if (is_true(facts.decomposable) && is_false(facts.regular))
    throw input_error("facts violation: decomposable disks are regular");
  if (is_true(facts.decomposable) && is_false(facts.bounds_lagrangian_disk))
    throw input_error("facts violation: a decomposable disk is in particular a Lagrangian disk");
  if (is_true(facts.regular) && is_false(facts.bounds_lagrangian_disk))
    throw input_error("facts violation: a regular disk is in particular a Lagrangian disk");
  if (facts.torus) {
    const auto& t = *facts.torus;
    if (t.p <= 0 || t.q <= 0 || std::gcd(t.p, t.q) != 1)
      throw input_error("facts violation: torus parameters must be positive and coprime");
    if (facts.max_tb && *facts.max_tb != t.max_tb())
      throw input_error("facts violation: a positive (p,q) torus knot has maximal tb = pq-p-q");
  }
}

std::string to_string(FillStatus s) {
  switch (s) {
    case FillStatus::fillable: return "Fillable";
    case FillStatus::not_fillable: return "NotFillable";
    case FillStatus::unknown: return "Unknown";
  }
  return "Unknown";
}

std::string to_string(FillStrength s) {
  switch (s) {
    case FillStrength::weak: return "weak";
    case FillStrength::strong: return "strong";
    case FillStrength::exact: return "exact";
    case FillStrength::stein: return "Stein";
  }
  return "weak";
}

namespace {

ConditionStatus from_flag(const std::optional<bool>& flag, bool wanted = true) {
  if (!flag) return ConditionStatus::unknown;
  return *flag == wanted ? ConditionStatus::holds : ConditionStatus::fails;
}

const char* kTagBelowOne = "surgery-below-one";
const char* kTagDiskEquivalence = "disk-filling-equivalence";
const char* kTagNecessary = "plus-one-necessary-conditions";
const char* kTagNoTight = "no-tight-positive-surgery";
const char* kTagTauBound = "tau-framing-bound";
const char* kTagTorusTwoStrand = "torus-two-strand-threshold";
const char* kTagTorusLarge = "torus-large-surgery-stein";

}  // namespace

std::vector<ConditionReport> necessary_conditions(const LegendrianRep& rep,
                                                  const KnotFacts& facts) {
  std::vector<ConditionReport> out;
  out.push_back({"tb = -1", rep.tb == -1 ? ConditionStatus::holds : ConditionStatus::fails});
  out.push_back({"rot = 0", rep.rot == 0 ? ConditionStatus::holds : ConditionStatus::fails});
  out.push_back({"quasipositive", from_flag(facts.quasipositive)});
  out.push_back({"slice", from_flag(facts.slice)});
  ConditionStatus tau_status = ConditionStatus::unknown;
  if (facts.tau) tau_status = (*facts.tau == 0) ? ConditionStatus::holds : ConditionStatus::fails;
  out.push_back({"tau = 0", tau_status});
  return out;
}

std::optional<Slope> taubound_threshold(const KnotFacts& facts, i64 tb) {
  if (!facts.tau || *facts.tau < 0) return std::nullopt;
  return Slope(f_of_tau(*facts.tau) - tb - 1, 1);
}

Verdict evaluate(const LegendrianRep& rep, const KnotFacts& facts, const Slope& r) {
  validate(facts);
  if (r.is_infinite() || r.sign() <= 0)
    throw input_error("fillability verdicts require a positive rational coefficient");

  Verdict v;
  v.details.smooth_coefficient = smooth_coefficient(rep, r);

  bool any_fillable = false, any_not_fillable = false;
  std::optional<FillStrength> strength;
  auto fire = [&](const char* rule, FillStatus status, std::optional<FillStrength> str,
                  const char* tag, std::string quote) {
    v.fired_rules.emplace_back(rule);
    v.citations.push_back({tag, std::move(quote)});
    if (status == FillStatus::fillable) {
      any_fillable = true;
      if (str && (!strength || *str > *strength)) strength = str;
    } else if (status == FillStatus::not_fillable) {
      any_not_fillable = true;
    }
  };

  const bool below_one = compare(r, 1) < 0;
  const bool is_one = r == Slope(1, 1);
  const bool above_one = compare(r, 1) > 0;

  // Rule 1: coefficients in (0, 1) are never fillable.
  if (below_one)
    fire("r-below-one", FillStatus::not_fillable, std::nullopt, kTagBelowOne,
         "surgery coefficients strictly between 0 and 1 never yield a symplectically "
         "fillable contact structure");

  // Rule 2: r = 1 on a tb = -1, rot = 0 representative bounding a Lagrangian
  // disk is fillable; exact always, Stein when the disk is regular or
  // decomposable.
  if (is_one && facts.bounds_lagrangian_disk.value_or(false) && rep.tb == -1 && rep.rot == 0) {
    const bool stein = facts.regular.value_or(false) || facts.decomposable.value_or(false);
    fire("r-equals-one-disk", FillStatus::fillable,
         stein ? FillStrength::stein : FillStrength::exact, kTagDiskEquivalence,
         "contact (1)-surgery is strongly fillable exactly when the knot bounds a Lagrangian "
         "disk in the standard 4-ball; minimal fillings are exact, and Stein when the disk "
         "is regular (decomposable disks are regular)");
    v.details.notes.push_back("a minimal filling here has the homology of S^1 x D^3");
  }

  // Rule 3: r = 1 with a failing necessary condition.
  if (is_one) {
    const bool fails = rep.tb != -1 || rep.rot != 0 || (facts.tau && *facts.tau != 0) ||
                       (facts.slice && !*facts.slice) ||
                       (facts.quasipositive && !*facts.quasipositive);
    if (fails)
      fire("r-equals-one-necessary", FillStatus::not_fillable, std::nullopt, kTagNecessary,
           "fillable contact (+1)-surgery forces tb = -1, rot = 0, and a quasipositive, "
           "slice knot type with tau = 0");
    v.details.notes.push_back(
        "weak-filling refinement (not decided here): weak fillability at r = 1 corresponds "
        "to bounding a null-homologous Lagrangian disk in a blow-up of the 4-ball");
  }

  // Rule 4: knot types with no tight positive surgery.
  if (above_one && facts.no_tight_positive_surgery.value_or(false))
    fire("no-tight-positive", FillStatus::not_fillable, std::nullopt, kTagNoTight,
         "the knot type admits no tight positive contact surgery on any Legendrian "
         "representative, so no fillable one either");

  // Rule 5: the tau framing bound, applied for every r > 0 (redundant with
  // rule 1 below coefficient one; both citations are reported).
  if (auto threshold = taubound_threshold(facts, rep.tb)) {
    v.details.f_tau = f_of_tau(*facts.tau);
    v.details.threshold = threshold;
    const i128 lhs = static_cast<i128>(r.p()) * threshold->q();
    const i128 rhs = static_cast<i128>(threshold->p()) * r.q();
    if (lhs <= rhs)
      fire("tau-bound", FillStatus::not_fillable, std::nullopt, kTagTauBound,
           "for tau >= 0, contact (r)-surgery is not symplectically fillable whenever "
           "r <= f(tau) - tb - 1");
  }

  // Rules 6 and 7: maximal-tb positive torus knots.
  if (above_one && facts.torus && rep.tb == facts.torus->max_tb()) {
    const auto& t = *facts.torus;
    if (t.p == 2) {
      // (2, 2n+1): fillable exactly from coefficient 2n+1 on.
      if (compare(r, t.q) >= 0)
        fire("torus-2q-fillable", FillStatus::fillable, FillStrength::stein, kTagTorusTwoStrand,
             "contact (r)-surgery on the maximal-tb (2,2n+1) torus knot is fillable exactly "
             "when r >= 2n+1, and then Stein fillable");
      else
        fire("torus-2q-obstructed", FillStatus::not_fillable, std::nullopt, kTagTorusTwoStrand,
             "contact (r)-surgery on the maximal-tb (2,2n+1) torus knot is not fillable "
             "for r < 2n+1");
    }
    if (compare(r, t.p + t.q - 1) >= 0)
      fire("torus-large", FillStatus::fillable, FillStrength::stein, kTagTorusLarge,
           "contact (r)-surgery on a maximal-tb positive (p,q) torus knot is Stein fillable "
           "for r >= p+q-1");
  }

  if (any_fillable && any_not_fillable) {
    std::string rules;
    for (const auto& f : v.fired_rules) rules += (rules.empty() ? "" : ", ") + f;
    throw consistency_error("contradictory verdict rules fired (" + rules +
                            "); the fact table or the rule engine is wrong");
  }
  v.status = any_fillable ? FillStatus::fillable
                          : (any_not_fillable ? FillStatus::not_fillable : FillStatus::unknown);
  if (any_fillable) v.strength = strength;
  return v;
}

}  // namespace ctsurg
