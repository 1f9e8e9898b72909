#pragma once

// The fillability decision procedure for contact (r)-surgery on a
// Legendrian knot in the standard tight 3-sphere. Every applicable rule
// fires and is recorded with a citation; contradictory firings abort with
// consistency_error instead of picking a winner.

#include "ctsurg/knot_facts.hpp"
#include "ctsurg/slope.hpp"
#include "ctsurg/surgery.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ctsurg {

enum class FillStatus { fillable, not_fillable, unknown };

// Strength ladder: Stein => exact => strong => weak.
enum class FillStrength { weak, strong, exact, stein };

struct Citation {
  std::string tag;    // stable machine-readable rule identifier
  std::string quote;  // human-readable statement of the cited result
};

struct VerdictDetails {
  std::optional<Slope> smooth_coefficient;
  std::optional<i64> f_tau;
  std::optional<Slope> threshold;  // f(tau) - tb - 1
  std::vector<std::string> notes;
};

struct Verdict {
  FillStatus status = FillStatus::unknown;
  std::optional<FillStrength> strength;
  std::vector<Citation> citations;
  VerdictDetails details;
  std::vector<std::string> fired_rules;
};

std::string to_string(FillStatus s);
std::string to_string(FillStrength s);

enum class ConditionStatus { holds, fails, unknown };

struct ConditionReport {
  std::string name;
  ConditionStatus status;
};

// The five necessary conditions for fillable contact (+1)-surgery
// (tb = -1, rot = 0, quasipositive, slice, tau = 0), each evaluated
// independently with three-valued logic.
std::vector<ConditionReport> necessary_conditions(const LegendrianRep& rep,
                                                  const KnotFacts& facts);

// f(tau) - tb - 1 when tau is known and non-negative; surgeries with
// coefficient at most this value are obstructed.
std::optional<Slope> taubound_threshold(const KnotFacts& facts, i64 tb);

// Runs the rule list for coefficient r > 0 and returns the combined verdict.
// Throws input_error for r <= 0 or facts violating their invariants, and
// consistency_error if rules disagree.
Verdict evaluate(const LegendrianRep& rep, const KnotFacts& facts, const Slope& r);

}  // namespace ctsurg
