// ctsurg: exact contact-surgery calculus for Legendrian knots in the
// standard tight 3-sphere. Subcommands cover Farey slope arithmetic, the
// decomposition of positive contact surgeries into (±1)-surgeries, d3
// invariants of the resulting contact structures, the f function, and the
// theorem-citing fillability verdict engine.
//
// Exit codes: 0 success, 2 input error, 3 internal-consistency error.

#include "ctsurg/cobordism.hpp"
#include "ctsurg/d3.hpp"
#include "ctsurg/farey.hpp"
#include "ctsurg/ftau.hpp"
#include "ctsurg/knotdb.hpp"
#include "ctsurg/linalg.hpp"
#include "ctsurg/slope.hpp"
#include "ctsurg/surgery.hpp"
#include "ctsurg/verdict.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>

namespace {

using nlohmann::json;
using namespace ctsurg;

json rational_json(const Rational& r) { return r.frac_str(); }
json slope_json(const Slope& s) { return frac_string(s); }

json integer_json(const Integer& n) {
  if (n >= 0 && n <= Integer(std::uint64_t(1) << 53)) return n.convert_to<std::uint64_t>();
  return n.str();
}

// The machine-readable envelope; the field set is frozen (see README).
struct Output {
  std::optional<FillStatus> status;
  std::optional<FillStrength> strength;
  std::vector<Citation> citations;
  std::optional<Slope> smooth_coefficient;
  std::optional<i64> f_tau;
  std::optional<Slope> threshold;
  std::optional<D3Result> d3_result;
  std::optional<Integer> h1_only;  // when d3 itself is unavailable
  std::vector<std::string> notes;
  std::optional<json> components;
};

json to_json(const Output& o) {
  json details;
  details["smooth_coefficient"] = o.smooth_coefficient ? slope_json(*o.smooth_coefficient) : json();
  details["f_tau"] = o.f_tau ? json(*o.f_tau) : json();
  details["threshold"] = o.threshold ? slope_json(*o.threshold) : json();
  if (o.d3_result) {
    details["d3"] = rational_json(o.d3_result->value);
    details["h1_order"] = integer_json(o.d3_result->h1_order);
    details["sigma"] = o.d3_result->sigma;
    details["chi"] = o.d3_result->chi;
    details["c_squared"] = rational_json(o.d3_result->c_squared);
  } else {
    details["d3"] = json();
    details["h1_order"] = o.h1_only ? integer_json(*o.h1_only) : json();
    details["sigma"] = json();
    details["chi"] = json();
    details["c_squared"] = json();
  }
  json out;
  out["status"] = o.status ? json(to_string(*o.status)) : json();
  out["strength"] = o.strength ? json(to_string(*o.strength)) : json();
  out["citations"] = json::array();
  for (const auto& c : o.citations) out["citations"].push_back({{"tag", c.tag}, {"quote", c.quote}});
  out["details"] = details;
  out["notes"] = o.notes;
  if (o.components) out["components"] = *o.components;
  return out;
}

json components_json(const SurgeryDiagram& diagram) {
  json arr = json::array();
  for (const auto& c : diagram.components) {
    arr.push_back({{"contact_sign", c.contact_sign},
                   {"tb", c.tb},
                   {"rot", c.rot},
                   {"stabilizations", c.stabilizations},
                   {"parent", c.parent},
                   {"smooth_framing", c.smooth_framing()}});
  }
  return arr;
}

void print_components(const SurgeryDiagram& diagram) {
  std::cout << "contact (" << to_string(diagram.coefficient) << ")-surgery on (tb="
            << diagram.original.tb << ", rot=" << diagram.original.rot << "): "
            << diagram.components.size() << " component(s)\n";
  for (std::size_t i = 0; i < diagram.components.size(); ++i) {
    const auto& c = diagram.components[i];
    std::cout << "  #" << i << ": contact (" << (c.contact_sign > 0 ? "+1" : "-1") << ")"
              << "  tb=" << c.tb << "  rot=" << c.rot << "  stabilizations=" << c.stabilizations
              << "  parent=";
    if (c.parent < 0)
      std::cout << "original";
    else
      std::cout << "#" << c.parent;
    std::cout << "  smooth framing=" << c.smooth_framing() << "\n";
  }
}

void print_d3(const D3Result& res) {
  std::cout << "d3 = " << res.value.str() << "\n"
            << "c^2 = " << res.c_squared.str() << "\n"
            << "sigma = " << res.sigma << "\n"
            << "chi = " << res.chi << "\n"
            << "|H1| = " << res.h1_order.str() << "\n"
            << "plus-count = " << res.plus_count << "\n";
  if (res.plus_count != 1)
    std::cout << "note: plus-count != 1; d3 uses the extended +q correction convention\n";
}

void add_extended_convention_note(const D3Result& res, Output& out) {
  if (res.plus_count != 1)
    out.notes.push_back("d3 computed with the extended convention: correction +q for q = " +
                        std::to_string(res.plus_count) + " contact (+1) components");
}

KnotDatabase load_db(const std::string& db_path) {
  return db_path.empty() ? seed_database() : ingest_csv(db_path);
}

void print_record(const KnotRecord& rec) {
  auto flag = [](const std::optional<bool>& f) { return f ? (*f ? "true" : "false") : "unknown"; };
  auto num = [](const std::optional<i64>& v) { return v ? std::to_string(*v) : "unknown"; };
  std::cout << rec.name;
  if (rec.same_as) std::cout << "  (= " << *rec.same_as << ")";
  if (rec.synthetic) std::cout << "  [derived]";
  std::cout << "\n  max_tb=" << num(rec.facts.max_tb) << "  tau=" << num(rec.facts.tau)
            << "  slice=" << flag(rec.facts.slice)
            << "  quasipositive=" << flag(rec.facts.quasipositive) << "\n  lagrangian_disk="
            << flag(rec.facts.bounds_lagrangian_disk)
            << "  decomposable=" << flag(rec.facts.decomposable)
            << "  regular=" << flag(rec.facts.regular)
            << "  no_tight_positive=" << flag(rec.facts.no_tight_positive_surgery) << "\n";
  if (rec.facts.torus)
    std::cout << "  torus=(" << rec.facts.torus->p << "," << rec.facts.torus->q << ")\n";
  if (rec.facts.epsilon) std::cout << "  epsilon=" << *rec.facts.epsilon << "\n";
  for (const auto& [field, src] : rec.provenance)
    std::cout << "  provenance[" << field << "]: " << src << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"exact contact-surgery calculus: slopes, surgery diagrams, d3 invariants, "
               "and fillability verdicts for Legendrian knots in the standard 3-sphere"};
  app.require_subcommand(1);

  // ---- farey ----
  auto* farey_cmd = app.add_subcommand("farey", "Farey tessellation slope calculus");
  farey_cmd->require_subcommand(1);

  std::string arg_a, arg_b, arg_r, arg_from, arg_to, arg_dir, arg_end = "to";
  auto* edge_cmd = farey_cmd->add_subcommand("edge", "do two slopes span a tessellation edge?");
  edge_cmd->add_option("A", arg_a, "first slope (p/q, integer, or inf)")->required();
  edge_cmd->add_option("B", arg_b, "second slope")->required();
  edge_cmd->callback([&] {
    std::cout << (is_edge(parse_slope(arg_a), parse_slope(arg_b)) ? "true" : "false") << "\n";
  });

  auto* mediant_cmd = farey_cmd->add_subcommand("mediant", "Farey child of an edge pair");
  mediant_cmd->add_option("A", arg_a, "first slope")->required();
  mediant_cmd->add_option("B", arg_b, "second slope")->required();
  mediant_cmd->callback([&] {
    std::cout << to_string(mediant(parse_slope(arg_a), parse_slope(arg_b))) << "\n";
  });

  auto* extremal_cmd = farey_cmd->add_subcommand(
      "extremal", "extremal Farey neighbor of R on the open arc FROM->TO");
  extremal_cmd->add_option("R", arg_r, "the slope whose neighbors are searched")->required();
  extremal_cmd->add_option("FROM", arg_from, "arc start")->required();
  extremal_cmd->add_option("TO", arg_to, "arc end")->required();
  extremal_cmd->add_option("DIR", arg_dir, "cw or ccw")->required()
      ->check(CLI::IsMember({"cw", "ccw"}));
  extremal_cmd->add_option("--end", arg_end, "which endpoint to approach (default: to)")
      ->check(CLI::IsMember({"from", "to"}));
  extremal_cmd->callback([&] {
    CircularArc arc(parse_slope(arg_from), parse_slope(arg_to),
                    arg_dir == "cw" ? ArcDirection::clockwise : ArcDirection::counterclockwise,
                    ArcOpenness::open);
    ArcEnd end = arg_end == "from" ? ArcEnd::nearest_to_from : ArcEnd::nearest_to_to;
    std::cout << to_string(extremal_neighbor(parse_slope(arg_r), arc, end)) << "\n";
  });

  // ---- surgery ----
  auto* surgery_cmd = app.add_subcommand("surgery", "contact-surgery decomposition and invariants");
  surgery_cmd->require_subcommand(1);

  i64 opt_tb = 0, opt_rot = 0;
  std::string opt_coef;
  bool opt_json = false;

  auto* dec_cmd = surgery_cmd->add_subcommand(
      "decompose", "decompose contact (r)-surgery into contact (+/-1)-surgeries");
  dec_cmd->add_option("--tb", opt_tb, "Thurston-Bennequin invariant")->required();
  dec_cmd->add_option("--rot", opt_rot, "rotation number")->required();
  dec_cmd->add_option("--coef", opt_coef, "contact surgery coefficient p/q > 0")->required();
  dec_cmd->add_flag("--json", opt_json, "machine-readable output");
  dec_cmd->callback([&] {
    LegendrianRep rep{"", opt_tb, opt_rot};
    Slope r = parse_slope(opt_coef);
    SurgeryDiagram diagram = decompose(rep, r);
    if (opt_json) {
      Output out;
      out.smooth_coefficient = smooth_coefficient(rep, r);
      out.components = components_json(diagram);
      std::cout << to_json(out).dump(2) << "\n";
    } else {
      print_components(diagram);
      std::cout << "smooth coefficient: " << to_string(smooth_coefficient(rep, r)) << "\n";
    }
  });

  auto* sd3_cmd = surgery_cmd->add_subcommand(
      "d3", "d3 invariant of the contact structure from contact (r)-surgery");
  sd3_cmd->add_option("--tb", opt_tb, "Thurston-Bennequin invariant")->required();
  sd3_cmd->add_option("--rot", opt_rot, "rotation number")->required();
  sd3_cmd->add_option("--coef", opt_coef, "contact surgery coefficient p/q > 0")->required();
  sd3_cmd->add_flag("--json", opt_json, "machine-readable output");
  sd3_cmd->callback([&] {
    LegendrianRep rep{"", opt_tb, opt_rot};
    Slope r = parse_slope(opt_coef);
    Cobordism cob = linking_matrix(decompose(rep, r));
    D3Result res = d3(cob);
    if (opt_json) {
      Output out;
      out.smooth_coefficient = smooth_coefficient(rep, r);
      out.d3_result = res;
      add_extended_convention_note(res, out);
      std::cout << to_json(out).dump(2) << "\n";
    } else {
      std::cout << "smooth coefficient: " << to_string(smooth_coefficient(rep, r)) << "\n";
      print_d3(res);
    }
  });

  // ---- d3 from a diagram file ----
  std::string opt_diagram;
  auto* d3_cmd = app.add_subcommand("d3", "d3 invariant of a hand-built surgery diagram");
  d3_cmd->add_option("--diagram", opt_diagram,
                     "file: dimension m, the m x m linking matrix, the rotation vector, "
                     "then the plus-count")
      ->required();
  d3_cmd->add_flag("--json", opt_json, "machine-readable output");
  d3_cmd->callback([&] {
    Cobordism cob = read_diagram_file(opt_diagram);
    D3Result res = d3(cob);
    if (opt_json) {
      Output out;
      out.d3_result = res;
      add_extended_convention_note(res, out);
      std::cout << to_json(out).dump(2) << "\n";
    } else {
      print_d3(res);
    }
  });

  // ---- ftau ----
  i64 opt_t = -1, opt_table = -1;
  auto* ftau_cmd = app.add_subcommand("ftau", "the integer minimization f(t)");
  ftau_cmd->add_option("T", opt_t, "argument t >= 0");
  ftau_cmd->add_option("--table", opt_table, "print f(0)..f(MAX), one value per line");
  ftau_cmd->callback([&] {
    if (opt_table >= 0) {
      for (i64 t = 0; t <= opt_table; ++t) std::cout << f_of_tau(t) << "\n";
    } else if (opt_t >= 0) {
      std::cout << f_of_tau(opt_t) << "\n";
    } else {
      throw input_error("ftau needs an argument T or --table MAX");
    }
  });

  // ---- obstruct ----
  std::string opt_knot, opt_db;
  auto* obstruct_cmd =
      app.add_subcommand("obstruct", "fillability verdict for contact (r)-surgery");
  obstruct_cmd->add_option("--knot", opt_knot, "knot name (seed table, T(p,q), P(-3-m,-3,3))")
      ->required();
  obstruct_cmd->add_option("--tb", opt_tb, "tb of the Legendrian representative")->required();
  obstruct_cmd->add_option("--rot", opt_rot, "rotation number of the representative")->required();
  obstruct_cmd->add_option("--coef", opt_coef, "contact surgery coefficient p/q > 0")->required();
  obstruct_cmd->add_option("--db", opt_db, "extra knot-fact CSV merged over the seed table");
  obstruct_cmd->add_flag("--json", opt_json, "machine-readable output");
  obstruct_cmd->callback([&] {
    KnotDatabase db = load_db(opt_db);
    auto rec = db.lookup(opt_knot);
    if (!rec) throw input_error("unknown knot '" + opt_knot + "'");
    if (rec->facts.max_tb && opt_tb > *rec->facts.max_tb)
      throw input_error("tb=" + std::to_string(opt_tb) + " exceeds the maximal tb " +
                        std::to_string(*rec->facts.max_tb) + " of " + rec->name);
    LegendrianRep rep{rec->name, opt_tb, opt_rot};
    Slope r = parse_slope(opt_coef);
    Verdict verdict = evaluate(rep, rec->facts, r);

    Output out;
    out.status = verdict.status;
    out.strength = verdict.strength;
    out.citations = verdict.citations;
    out.smooth_coefficient = verdict.details.smooth_coefficient;
    out.f_tau = verdict.details.f_tau;
    out.threshold = verdict.details.threshold;
    out.notes = verdict.details.notes;
    Cobordism cob = linking_matrix(decompose(rep, r));
    if (h1_order(cob.Q) == 0) {
      out.h1_only = Integer(0);
      out.notes.push_back("surgered manifold is not a rational homology sphere; d3 undefined");
    } else {
      out.d3_result = d3(cob);
      if (opt_json) add_extended_convention_note(*out.d3_result, out);
    }

    if (opt_json) {
      std::cout << to_json(out).dump(2) << "\n";
    } else {
      std::cout << "verdict: " << to_string(verdict.status);
      if (verdict.strength) std::cout << " (" << to_string(*verdict.strength) << ")";
      std::cout << "\n";
      for (const auto& c : verdict.citations)
        std::cout << "  [" << c.tag << "] " << c.quote << "\n";
      std::cout << "smooth coefficient: "
                << to_string(*verdict.details.smooth_coefficient) << "\n";
      if (verdict.details.f_tau) std::cout << "f(tau) = " << *verdict.details.f_tau << "\n";
      if (verdict.details.threshold) {
        if (compare(*verdict.details.threshold, 0) > 0)
          std::cout << "obstructed for r <= " << to_string(*verdict.details.threshold) << "\n";
        else
          std::cout << "tau framing threshold f(tau) - tb - 1 = "
                    << to_string(*verdict.details.threshold)
                    << " (no positive coefficient obstructed)\n";
      }
      if (out.d3_result) print_d3(*out.d3_result);
      for (const auto& n : out.notes) std::cout << "note: " << n << "\n";
    }
  });

  // ---- knots ----
  auto* knots_cmd = app.add_subcommand("knots", "inspect the knot-fact database");
  knots_cmd->require_subcommand(1);
  std::string opt_name, opt_sum_a, opt_sum_b, opt_cable_name;
  i64 opt_cable_n = 0;
  std::string opt_db2;

  auto* list_cmd = knots_cmd->add_subcommand("list", "list database records");
  list_cmd->add_option("--db", opt_db2, "extra knot-fact CSV merged over the seed table");
  list_cmd->callback([&] {
    KnotDatabase db = load_db(opt_db2);
    for (const auto& name : db.names()) std::cout << name << "\n";
    std::cout << "T(p,q)          [parametric: positive torus knots]\n";
    std::cout << "P(-3-m,-3,3)    [parametric: pretzel family, 0 <= m <= 100]\n";
  });

  auto* show_cmd = knots_cmd->add_subcommand("show", "show one record");
  show_cmd->add_option("NAME", opt_name, "knot name")->required();
  show_cmd->add_option("--db", opt_db2, "extra knot-fact CSV merged over the seed table");
  show_cmd->callback([&] {
    KnotDatabase db = load_db(opt_db2);
    auto rec = db.lookup(opt_name);
    if (!rec) throw input_error("unknown knot '" + opt_name + "'");
    print_record(*rec);
  });

  auto* sum_cmd = knots_cmd->add_subcommand("sum", "connected sum closure record");
  sum_cmd->add_option("A", opt_sum_a, "first summand")->required();
  sum_cmd->add_option("B", opt_sum_b, "second summand")->required();
  sum_cmd->add_option("--db", opt_db2, "extra knot-fact CSV merged over the seed table");
  sum_cmd->callback([&] {
    KnotDatabase db = load_db(opt_db2);
    auto a = db.lookup(opt_sum_a);
    auto b = db.lookup(opt_sum_b);
    if (!a) throw input_error("unknown knot '" + opt_sum_a + "'");
    if (!b) throw input_error("unknown knot '" + opt_sum_b + "'");
    print_record(connected_sum(*a, *b));
  });

  auto* cable_cmd = knots_cmd->add_subcommand("cable", "(n,1)-cable closure record");
  cable_cmd->add_option("NAME", opt_cable_name, "knot name")->required();
  cable_cmd->add_option("N", opt_cable_n, "cable index n >= 1")->required();
  cable_cmd->add_option("--db", opt_db2, "extra knot-fact CSV merged over the seed table");
  cable_cmd->callback([&] {
    KnotDatabase db = load_db(opt_db2);
    auto a = db.lookup(opt_cable_name);
    if (!a) throw input_error("unknown knot '" + opt_cable_name + "'");
    print_record(cable_n1(*a, opt_cable_n));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ctsurg::consistency_error& e) {
    std::cerr << "internal consistency error: " << e.what() << "\n";
    return 3;
  } catch (const ctsurg::input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
