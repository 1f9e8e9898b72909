#include "ctsurg/knotdb.hpp"

#include "ctsurg/verdict.hpp"

#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>

namespace ctsurg {

namespace {

constexpr const char* kHeader =
    "name,max_tb,tau,slice,quasipositive,disk,decomposable,regular,"
    "torus_p,torus_q,no_tight_positive,epsilon,provenance";

// One provenance blob per row; the last column swallows the rest of the
// line, so free text with commas round-trips without quoting.
const char* kSeedCsv =
    "name,max_tb,tau,slice,quasipositive,disk,decomposable,regular,"
    "torus_p,torus_q,no_tight_positive,epsilon,provenance\n"
    "0_1,-1,0,true,true,true,true,true,,,,0,unknot: the maximal-tb representative bounds the "
    "standard Lagrangian disk in the 4-ball; remaining invariants from KnotInfo\n"
    "10_155,,0,true,true,false,,,,,,,quasipositive slice knot; bounds a complex disk in the "
    "4-ball but no Lagrangian disk; maximal tb lies below -1 but the exact value is not "
    "recorded here; tau = 0 since slice\n"
    "11n139,-1,0,true,true,true,true,true,,,,,bounds a decomposable Lagrangian disk "
    "(census of knots through 12 crossings, names per KnotInfo); slice, hence tau = 0 and "
    "slice-Bennequin pins maximal tb = -1; decomposable disks are regular\n"
    "12n582,-1,0,true,true,true,true,true,,,,,bounds a decomposable Lagrangian disk "
    "(census of knots through 12 crossings, names per KnotInfo); slice, hence tau = 0 and "
    "slice-Bennequin pins maximal tb = -1; decomposable disks are regular\n"
    "12n838,-1,0,true,true,true,true,true,,,,,bounds a decomposable Lagrangian disk "
    "(census of knots through 12 crossings, names per KnotInfo); slice, hence tau = 0 and "
    "slice-Bennequin pins maximal tb = -1; decomposable disks are regular\n"
    "4_1,-3,0,false,false,false,,,,,true,,figure-eight: no tight positive contact surgery "
    "on any Legendrian representative; not slice, not quasipositive, maximal tb = -3 "
    "(KnotInfo)\n"
    "8_20,-2,0,true,true,false,,,,,,,quasipositive slice knot; bounds a complex disk in the "
    "4-ball but no Lagrangian disk; maximal tb = -2 (Legendrian knot atlas); tau = 0 since "
    "slice\n"
    "m10_140,-1,0,true,true,true,true,true,,,,,bounds a decomposable Lagrangian disk "
    "(census of knots through 12 crossings, names per KnotInfo; m = mirror); slice, hence "
    "tau = 0 and slice-Bennequin pins maximal tb = -1; decomposable disks are regular\n"
    "m12n768,-1,0,true,true,true,true,true,,,,,bounds a decomposable Lagrangian disk "
    "(census of knots through 12 crossings, names per KnotInfo; m = mirror); slice, hence "
    "tau = 0 and slice-Bennequin pins maximal tb = -1; decomposable disks are regular\n"
    "m9_46,-1,0,true,true,true,true,true,,,,,bounds a decomposable Lagrangian disk "
    "(census of knots through 12 crossings, names per KnotInfo; m = mirror); equals the "
    "pretzel P(-3,-3,3); slice, hence tau = 0 and slice-Bennequin pins maximal tb = -1; "
    "decomposable disks are regular\n";

const char* kFieldNames[] = {"max_tb",       "tau",   "slice",   "quasipositive",
                             "disk",         "decomposable",     "regular",
                             "torus",        "no_tight_positive", "epsilon"};

std::vector<std::string> set_fields(const KnotFacts& f) {
  std::vector<std::string> out;
  if (f.max_tb) out.push_back("max_tb");
  if (f.tau) out.push_back("tau");
  if (f.slice) out.push_back("slice");
  if (f.quasipositive) out.push_back("quasipositive");
  if (f.bounds_lagrangian_disk) out.push_back("disk");
  if (f.decomposable) out.push_back("decomposable");
  if (f.regular) out.push_back("regular");
  if (f.torus) out.push_back("torus");
  if (f.no_tight_positive_surgery) out.push_back("no_tight_positive");
  if (f.epsilon) out.push_back("epsilon");
  return out;
}

std::optional<bool> parse_bool(const std::string& cell, const std::string& where) {
  if (cell.empty()) return std::nullopt;
  if (cell == "true") return true;
  if (cell == "false") return false;
  throw input_error(where + ": expected 'true', 'false' or an empty cell, got '" + cell + "'");
}

std::optional<i64> parse_int(const std::string& cell, const std::string& where) {
  if (cell.empty()) return std::nullopt;
  i64 v = 0;
  auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (ec != std::errc() || ptr != cell.data() + cell.size())
    throw input_error(where + ": malformed integer '" + cell + "'");
  return v;
}

std::string bool_cell(const std::optional<bool>& v) {
  return v ? (*v ? "true" : "false") : "";
}

std::string int_cell(const std::optional<i64>& v) { return v ? std::to_string(*v) : ""; }

KnotRecord torus_record(const std::string& name, i64 p, i64 q) {
  if (p > q) std::swap(p, q);
  KnotRecord rec;
  rec.name = name;
  rec.synthetic = true;
  if (p == 1) {
    // T(1,q) is the unknot.
    KnotRecord unknot = *seed_database().lookup("0_1");
    rec.facts = unknot.facts;
    rec.provenance = unknot.provenance;
    rec.same_as = "0_1";
    return rec;
  }
  rec.facts.torus = TorusParams{p, q};
  rec.facts.max_tb = rec.facts.torus->max_tb();
  rec.provenance["torus"] = "positive torus knot, parametric family";
  rec.provenance["max_tb"] = "maximal tb of a positive (p,q) torus knot is pq-p-q";
  if (p == 2 && q == 3) rec.facts.tau = 1;
  if (p == 2 && q == 5) rec.facts.tau = 2;
  if (rec.facts.tau) rec.provenance["tau"] = "recorded tau for the small two-strand torus knots";
  return rec;
}

KnotRecord pretzel_record(const std::string& name, i64 m) {
  KnotRecord rec;
  rec.name = name;
  rec.synthetic = true;
  if (m == 0) {
    KnotRecord base = *seed_database().lookup("m9_46");
    rec.facts = base.facts;
    rec.provenance = base.provenance;
    rec.same_as = "m9_46";
    return rec;
  }
  rec.facts.bounds_lagrangian_disk = true;
  rec.facts.slice = true;
  rec.facts.tau = 0;
  rec.facts.quasipositive = true;
  rec.facts.max_tb = -1;
  const std::string why =
      "pretzel family P(-3-m,-3,3): half-ribbon twists on P(-3,-3,3) preserve the Lagrangian "
      "disk filling; slice, hence tau = 0 and maximal tb = -1";
  for (const char* f : {"disk", "slice", "tau", "quasipositive", "max_tb"}) rec.provenance[f] = why;
  return rec;
}

// "T(p,q)" -> (p, q)
std::optional<std::pair<i64, i64>> match_torus(const std::string& name) {
  if (name.size() < 6 || name.substr(0, 2) != "T(" || name.back() != ')') return std::nullopt;
  auto comma = name.find(',');
  if (comma == std::string::npos) return std::nullopt;
  try {
    auto p = parse_int(name.substr(2, comma - 2), name);
    auto q = parse_int(name.substr(comma + 1, name.size() - comma - 2), name);
    if (!p || !q || *p <= 0 || *q <= 0 || std::gcd(*p, *q) != 1) return std::nullopt;
    return std::make_pair(*p, *q);
  } catch (const input_error&) {
    return std::nullopt;
  }
}

// "P(-k,-3,3)" with k = 3+m, 0 <= m <= 100 -> m
std::optional<i64> match_pretzel(const std::string& name) {
  if (name.substr(0, 3) != "P(-" || name.size() < 10) return std::nullopt;
  auto comma = name.find(',');
  if (comma == std::string::npos || name.substr(comma) != ",-3,3)") return std::nullopt;
  try {
    auto k = parse_int(name.substr(3, comma - 3), name);
    if (!k || *k < 3 || *k > 103) return std::nullopt;
    return *k - 3;
  } catch (const input_error&) {
    return std::nullopt;
  }
}

std::optional<bool> and3(const std::optional<bool>& a, const std::optional<bool>& b) {
  // Closure hypothesis needs both flags known true; anything else leaves the
  // conclusion unknown (a false input defeats the hypothesis, it does not
  // prove the negation).
  if (a.value_or(false) && b.value_or(false)) return true;
  return std::nullopt;
}

}  // namespace

bool operator==(const KnotFacts& a, const KnotFacts& b) {
  return a.tau == b.tau && a.slice == b.slice && a.quasipositive == b.quasipositive &&
         a.max_tb == b.max_tb && a.bounds_lagrangian_disk == b.bounds_lagrangian_disk &&
         a.decomposable == b.decomposable && a.regular == b.regular && a.torus == b.torus &&
         a.no_tight_positive_surgery == b.no_tight_positive_surgery && a.epsilon == b.epsilon;
}

bool operator==(const KnotRecord& a, const KnotRecord& b) {
  return a.name == b.name && a.facts == b.facts && a.provenance == b.provenance &&
         a.synthetic == b.synthetic && a.same_as == b.same_as;
}

void KnotDatabase::add(KnotRecord rec) {
  if (rec.name.empty()) throw input_error("knot record must have a name");
  auto [it, inserted] = records_.emplace(rec.name, std::move(rec));
  if (!inserted) throw input_error("duplicate knot name '" + it->first + "'");
}

const KnotRecord* KnotDatabase::find_explicit(const std::string& name) const {
  auto it = records_.find(name);
  return it == records_.end() ? nullptr : &it->second;
}

std::optional<KnotRecord> KnotDatabase::lookup(const std::string& name) const {
  if (name == "unknot") return lookup("0_1");
  if (const KnotRecord* rec = find_explicit(name)) return *rec;
  if (auto tq = match_torus(name)) return torus_record(name, tq->first, tq->second);
  if (auto m = match_pretzel(name)) return pretzel_record(name, *m);
  return std::nullopt;
}

std::vector<std::string> KnotDatabase::names() const {
  std::vector<std::string> out;
  out.reserve(records_.size());
  for (const auto& [name, rec] : records_) out.push_back(name);
  return out;
}

const std::string& seed_csv_text() {
  static const std::string text = kSeedCsv;
  return text;
}

KnotDatabase seed_database() {
  std::istringstream in(seed_csv_text());
  return parse_csv(in, "embedded seed table");
}

KnotDatabase parse_csv(std::istream& in, const std::string& source) {
  KnotDatabase db;
  std::string line;
  if (!std::getline(in, line)) throw input_error(source + ": empty file");
  if (line == std::string(kHeader) + "\r") line.pop_back();
  if (line != kHeader)
    throw input_error(source + ": header must be exactly '" + kHeader + "'");

  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::string where = source + " line " + std::to_string(lineno);

    std::vector<std::string> cells;
    std::size_t pos = 0;
    for (int i = 0; i < 12; ++i) {
      auto comma = line.find(',', pos);
      if (comma == std::string::npos)
        throw input_error(where + ": expected 13 columns (the last one takes the rest of the line)");
      cells.push_back(line.substr(pos, comma - pos));
      pos = comma + 1;
    }
    cells.push_back(line.substr(pos));  // provenance: everything after the 12th comma

    KnotRecord rec;
    rec.name = cells[0];
    if (rec.name.empty()) throw input_error(where + ": empty knot name");
    rec.facts.max_tb = parse_int(cells[1], where);
    rec.facts.tau = parse_int(cells[2], where);
    rec.facts.slice = parse_bool(cells[3], where);
    rec.facts.quasipositive = parse_bool(cells[4], where);
    rec.facts.bounds_lagrangian_disk = parse_bool(cells[5], where);
    rec.facts.decomposable = parse_bool(cells[6], where);
    rec.facts.regular = parse_bool(cells[7], where);
    auto tp = parse_int(cells[8], where);
    auto tq = parse_int(cells[9], where);
    if (tp.has_value() != tq.has_value())
      throw input_error(where + ": torus_p and torus_q must be set together");
    if (tp) {
      if (*tp > *tq) std::swap(*tp, *tq);
      rec.facts.torus = TorusParams{*tp, *tq};
    }
    rec.facts.no_tight_positive_surgery = parse_bool(cells[10], where);
    rec.facts.epsilon = parse_int(cells[11], where);
    try {
      validate(rec.facts);
    } catch (const input_error& e) {
      throw input_error(where + ": " + e.what());
    }
    for (const auto& field : set_fields(rec.facts)) rec.provenance[field] = cells[12];
    try {
      db.add(std::move(rec));
    } catch (const input_error& e) {
      throw input_error(where + ": " + e.what());
    }
  }
  return db;
}

KnotDatabase ingest_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open knot database '" + path + "'");
  KnotDatabase merged = seed_database();
  KnotDatabase extra = parse_csv(in, path);
  for (const auto& name : extra.names()) {
    KnotRecord rec = *extra.find_explicit(name);
    try {
      merged.add(std::move(rec));
    } catch (const input_error& e) {
      throw input_error(path + ": " + e.what());
    }
  }
  return merged;
}

std::string emit_csv(const KnotDatabase& db) {
  std::ostringstream out;
  out << kHeader << "\n";
  for (const auto& name : db.names()) {
    const KnotRecord& rec = *db.find_explicit(name);
    if (rec.synthetic) continue;
    const KnotFacts& f = rec.facts;
    out << rec.name << ',' << int_cell(f.max_tb) << ',' << int_cell(f.tau) << ','
        << bool_cell(f.slice) << ',' << bool_cell(f.quasipositive) << ','
        << bool_cell(f.bounds_lagrangian_disk) << ',' << bool_cell(f.decomposable) << ','
        << bool_cell(f.regular) << ',';
    if (f.torus)
      out << f.torus->p << ',' << f.torus->q << ',';
    else
      out << ",,";
    out << bool_cell(f.no_tight_positive_surgery) << ',' << int_cell(f.epsilon) << ',';

    // Provenance cell: one shared string stays as-is, differing per-field
    // strings flatten to "field=...; field=..." in field order.
    std::vector<std::string> fields = set_fields(f);
    std::string shared;
    bool uniform = true;
    for (const auto& field : fields) {
      auto it = rec.provenance.find(field);
      const std::string& src = it == rec.provenance.end() ? std::string() : it->second;
      if (shared.empty())
        shared = src;
      else if (src != shared)
        uniform = false;
    }
    if (uniform) {
      out << shared;
    } else {
      bool first = true;
      for (const char* field : kFieldNames) {
        auto it = rec.provenance.find(field);
        if (it == rec.provenance.end()) continue;
        if (!first) out << "; ";
        out << field << "=" << it->second;
        first = false;
      }
    }
    out << "\n";
  }
  return out.str();
}

bool is_unknot(const KnotRecord& rec) {
  return rec.name == "0_1" || rec.same_as == "0_1";
}

KnotRecord connected_sum(const KnotRecord& a, const KnotRecord& b) {
  KnotRecord rec;
  rec.name = a.name + "#" + b.name;
  rec.synthetic = true;
  if (is_unknot(a) || is_unknot(b)) {
    const KnotRecord& other = is_unknot(a) ? b : a;
    rec.facts = other.facts;
    rec.same_as = other.same_as.value_or(other.name);
    rec.provenance["*"] = "connected sum with the unknot is the identity";
    return rec;
  }
  rec.facts.bounds_lagrangian_disk = and3(a.facts.bounds_lagrangian_disk, b.facts.bounds_lagrangian_disk);
  rec.facts.decomposable = and3(a.facts.decomposable, b.facts.decomposable);
  if (rec.facts.bounds_lagrangian_disk)
    rec.provenance["disk"] =
        "closure: summands bounding disjoint Lagrangian disks give a Lagrangian disk for the sum";
  if (rec.facts.decomposable)
    rec.provenance["decomposable"] = "closure: the connected-sum disk of decomposable disks is decomposable";
  return rec;
}

KnotRecord cable_n1(const KnotRecord& a, i64 n) {
  if (n < 1) throw input_error("cable index must be a positive integer");
  KnotRecord rec;
  rec.name = a.name + "_(" + std::to_string(n) + ",1)";
  rec.synthetic = true;
  if (is_unknot(a)) {
    rec.facts = a.facts;
    rec.same_as = "0_1";
    rec.provenance["*"] = "the (n,1)-cable of the maximal-tb unknot is the unknot itself";
    return rec;
  }
  if (a.facts.bounds_lagrangian_disk.value_or(false)) {
    rec.facts.bounds_lagrangian_disk = true;
    rec.provenance["disk"] = "closure: the (n,1)-cable of a Lagrangian-disk boundary bounds a Lagrangian disk";
  }
  if (a.facts.decomposable.value_or(false)) {
    rec.facts.decomposable = true;
    rec.provenance["decomposable"] = "closure: decomposable concordances cable to decomposable concordances";
  }
  return rec;
}

}  // namespace ctsurg
