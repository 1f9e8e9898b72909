#pragma once

// Knot-fact persistence: the embedded seed table, CSV ingest/emit, the
// parametric torus and pretzel families, and the closure operations for
// disk-bounding flags under connected sum and (n,1)-cabling.

#include "ctsurg/knot_facts.hpp"

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ctsurg {

struct KnotRecord {
  std::string name;  // KnotInfo-style, "m" prefix for mirrors
  KnotFacts facts;
  std::map<std::string, std::string> provenance;  // field -> citation
  bool synthetic = false;                         // closure- or generator-produced
  std::optional<std::string> same_as;             // the knot this record collapses to

  friend bool operator==(const KnotRecord&, const KnotRecord&);
};

bool operator==(const KnotFacts& a, const KnotFacts& b);

class KnotDatabase {
 public:
  // Throws input_error on duplicate names. Ingested records are never
  // overwritten by later additions.
  void add(KnotRecord rec);

  // Explicit records plus on-demand instantiation of the parametric
  // families T(p,q) and P(-3-m,-3,3) (m <= 100) and the "unknot" alias.
  std::optional<KnotRecord> lookup(const std::string& name) const;

  const KnotRecord* find_explicit(const std::string& name) const;
  std::vector<std::string> names() const;  // explicit records, sorted
  std::size_t size() const { return records_.size(); }

 private:
  std::map<std::string, KnotRecord> records_;
};

// The embedded table: the unknot, the six small disk-bounding knots, the
// figure-eight, and the two quasipositive slice knots without Lagrangian
// disks. Parametric families are served by lookup().
KnotDatabase seed_database();

// The CSV text the seed table is built from; data/seed_knots.csv ships the
// identical bytes.
const std::string& seed_csv_text();

// Pure CSV reader (no seed merged in); `source` names the stream for
// row-numbered diagnostics. Rejects schema violations, duplicate names and
// fact-invariant violations.
KnotDatabase parse_csv(std::istream& in, const std::string& source);

// Seed table merged with the file at `path`; name collisions are errors.
KnotDatabase ingest_csv(const std::string& path);

// Canonical CSV rendering (sorted by name, synthetic records omitted).
// emit(parse(emit(db))) == emit(db) byte for byte.
std::string emit_csv(const KnotDatabase& db);

// Synthetic record for a # b. The disk and decomposable flags are true when
// both inputs are known true, otherwise unknown; a summand equal to the
// unknot is the unit and copies the partner's facts.
KnotRecord connected_sum(const KnotRecord& a, const KnotRecord& b);

// Synthetic record for the (n,1)-cable, n >= 1. Disk and decomposable
// propagate when true; the cable of the unknot is the unknot itself.
KnotRecord cable_n1(const KnotRecord& a, i64 n);

bool is_unknot(const KnotRecord& rec);

}  // namespace ctsurg
