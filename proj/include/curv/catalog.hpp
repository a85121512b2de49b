#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "curv/curvature.hpp"
#include "curv/map.hpp"
#include "curv/projective.hpp"

namespace curv {

enum class Surface { S2, RP2 };

struct CurvatureSummary {
  Rational min_phi;
  int min_forman = 0;
  Rational min_corner;
  Rational min_psi;
  Rational total_phi;
};

struct ClassRecord {
  std::string name;       // FC-S2-E{i}-{j}V{k}[Dual] / CC-...
  EmbeddedMap map;
  Surface surface = Surface::S2;
  std::string dual_name;  // resolves within the catalog; = name when self-dual
  bool self_dual = false;
  int connectivity = 0;
  CurvatureSummary summary;
};

struct RP2Record {
  std::string name;
  QuotientMap quotient;
};

struct CatalogStats {
  int generator_outputs = 0;  // quadrangulations / corner candidates emitted
  int medial_classes = 0;     // surviving medial graphs (forman pipeline)
  int self_dual_pairs = 0;
};

struct Catalog {
  Positivity positivity = Positivity::forman;
  std::vector<ClassRecord> sphere;      // code-sorted within edge count
  std::vector<RP2Record> projective;
  CatalogStats stats;
  std::string provenance;
};

// Full positive-Forman-curvature classification: quadrangulation generation,
// dualization to 4-regular candidates, inverse medial, tessellation and
// positivity checks, mirror-identified dedup, projective scan.
Catalog classify_forman();

// Positive-corner-curvature classification: pattern-restricted generation,
// dual closure, projective scan.
Catalog classify_corner();

nlohmann::json catalog_to_json(const Catalog& c);
Bytes catalog_planar_code(const Catalog& c);

// Per-element curvature and tessellation report; optional companion reports
// for the dual and medial maps.
nlohmann::json report_json(const EmbeddedMap& m, bool with_dual = false,
                           bool with_medial = false);

nlohmann::json quotient_to_json(const QuotientMap& q);

// Parallelism cap from CURVATESS_THREADS (default 1; output never depends on
// the worker count).
int thread_cap();

}  // namespace curv
