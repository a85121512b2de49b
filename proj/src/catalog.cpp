#include "curv/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <future>
#include <map>
#include <optional>
#include <stdexcept>

#include "curv/codec.hpp"
#include "curv/generate.hpp"
#include "curv/tessellation.hpp"
#include "curv/transforms.hpp"

namespace curv {

int thread_cap() {
  if (const char* env = std::getenv("CURVATESS_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  return 1;
}

namespace {

using nlohmann::json;

json rational_json(const Rational& r) {
  return json{{"num", r.num()}, {"den", r.den()}};
}

CurvatureSummary summarize(const CurvatureReport& rep) {
  CurvatureSummary s;
  s.min_phi = rep.min_phi;
  s.min_forman = rep.min_forman;
  s.min_corner = rep.min_corner;
  s.min_psi = rep.min_psi;
  s.total_phi = rep.total_phi;
  return s;
}

// A dual pair destined for the catalog; `front` is the naming representative
// (fewer vertices, canonical code as tie-break).
struct PairRow {
  EmbeddedMap front;
  std::optional<EmbeddedMap> partner;  // absent when self-dual
  Bytes front_code;
};

std::vector<ClassRecord> rows_to_records(std::vector<PairRow>&& rows,
                                         const std::string& prefix) {
  // Group rows by edge count; within a group rank by the front graph's
  // vertex count, then canonical code.
  std::stable_sort(rows.begin(), rows.end(), [](const PairRow& a, const PairRow& b) {
    const int ea = a.front.edge_count(), eb = b.front.edge_count();
    if (ea != eb) return ea < eb;
    const int va = a.front.vertex_count(), vb = b.front.vertex_count();
    if (va != vb) return va < vb;
    return a.front_code < b.front_code;
  });

  std::vector<ClassRecord> out;
  int prev_e = -1, j = 0;
  for (auto& row : rows) {
    const int e = row.front.edge_count();
    j = (e == prev_e) ? j + 1 : 1;
    prev_e = e;
    const std::string base =
        prefix + "-E" + std::to_string(e) + "-" + std::to_string(j);
    const std::string front_name =
        base + "V" + std::to_string(row.front.vertex_count());

    if (row.partner) {
      const std::string dual_name =
          base + "V" + std::to_string(row.partner->vertex_count()) + "Dual";
      out.push_back(ClassRecord{front_name, std::move(row.front), Surface::S2,
                                dual_name, false, 0, {}});
      out.push_back(ClassRecord{dual_name, std::move(*row.partner), Surface::S2,
                                front_name, false, 0, {}});
    } else {
      out.push_back(ClassRecord{front_name, std::move(row.front), Surface::S2,
                                front_name, true, 0, {}});
    }
  }
  for (auto& rec : out) {
    rec.connectivity = connectivity(rec.map);
    rec.summary = summarize(curvature_report(rec.map));
  }
  return out;
}

PairRow make_row(EmbeddedMap g, EmbeddedMap gstar, bool self_dual) {
  if (self_dual) return {std::move(g), std::nullopt, {}};
  const bool swap_front =
      gstar.vertex_count() < g.vertex_count() ||
      (gstar.vertex_count() == g.vertex_count() &&
       canonical_code(gstar, IsoMode::OP_OR) < canonical_code(g, IsoMode::OP_OR));
  if (swap_front) std::swap(g, gstar);
  return {std::move(g), std::move(gstar), {}};
}

template <typename T, typename Fn>
auto parallel_map(const std::vector<T>& items, Fn fn)
    -> std::vector<decltype(fn(items[0]))> {
  using R = decltype(fn(items[0]));
  const int workers = std::min<int>(thread_cap(), std::max<std::size_t>(items.size(), 1));
  std::vector<R> results(items.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < items.size(); ++i) results[i] = fn(items[i]);
    return results;
  }
  std::vector<std::future<void>> futs;
  std::atomic<std::size_t> next{0};
  for (int w = 0; w < workers; ++w)
    futs.push_back(std::async(std::launch::async, [&]() {
      for (std::size_t i = next++; i < items.size(); i = next++)
        results[i] = fn(items[i]);
    }));
  for (auto& f : futs) f.get();
  return results;
}

std::string version_string() { return "curvatess 1.0.0"; }

}  // namespace

Catalog classify_forman() {
  Catalog cat;
  cat.positivity = Positivity::forman;
  cat.provenance = version_string() +
                   "; quadrangulations: max_faces=24, vp face patterns, simple, "
                   "2-connected";

  QuadConstraints qc;
  qc.max_faces = 24;
  qc.allowed_face_patterns = kVpPatterns;
  const std::vector<EmbeddedMap> quads = generate_quadrangulations(qc);
  cat.stats.generator_outputs = static_cast<int>(quads.size());

  struct Stage {
    bool kept = false;
    std::optional<DualPair> pair;
  };
  const std::vector<Stage> staged = parallel_map(quads, [](const EmbeddedMap& q) {
    Stage st;
    EmbeddedMap h = dual(q);
    for (int v = 0; v < h.vertex_count(); ++v)
      if (h.degree(v) != 4)
        throw std::logic_error("dual of a quadrangulation must be 4-regular");
    if (!is_tessellation(h).passed) return st;
    DualPair pair = inverse_medial(h);
    const bool t1 = is_tessellation(pair.primal).passed;
    const bool t2 = is_tessellation(pair.dual).passed;
    if (t1 != t2)
      throw std::logic_error("tessellation property must be self-dual");
    if (!t1) return st;

    // Candidate medial vertex patterns guarantee positive Forman curvature;
    // assert both curvature routes instead of assuming.
    for (const EmbeddedMap* g : {&pair.primal, &pair.dual})
      for (int e = 0; e < g->edge_count(); ++e) {
        const int f = forman_formula(*g, e);
        if (f <= 0) throw std::logic_error("pipeline admitted a non-positive edge");
        if (f != forman_definitional(*g, e))
          throw std::logic_error("Forman curvature routes disagree");
      }
    if (are_isomorphic(medial(pair.primal), h) == IsoClass::None)
      throw std::logic_error("inverse medial does not invert the medial map");

    st.kept = true;
    st.pair = std::move(pair);
    return st;
  });

  std::map<Bytes, DualPair> by_medial;
  for (const Stage& st : staged)
    if (st.kept) by_medial.emplace(st.pair->source.bytes, *st.pair);

  cat.stats.medial_classes = static_cast<int>(by_medial.size());
  std::vector<PairRow> rows;
  for (auto& [code, pair] : by_medial) {
    if (pair.self_dual) ++cat.stats.self_dual_pairs;
    rows.push_back(make_row(std::move(pair.primal), std::move(pair.dual),
                            pair.self_dual));
    rows.back().front_code = canonical_code(rows.back().front, IsoMode::OP_OR).bytes;
  }
  cat.sphere = rows_to_records(std::move(rows), "FC-S2");

  std::vector<EmbeddedMap> all;
  for (const auto& rec : cat.sphere) all.push_back(rec.map);
  int idx = 0;
  for (auto& q : classify_rp2(all, Positivity::forman)) {
    const std::string name = "FC-RP2-E" + std::to_string(q.edge_count) + "-" +
                             std::to_string(++idx) + "V" +
                             std::to_string(q.vertex_count);
    cat.projective.push_back(RP2Record{name, std::move(q)});
  }
  return cat;
}

Catalog classify_corner() {
  Catalog cat;
  cat.positivity = Positivity::corner;
  cat.provenance = version_string() +
                   "; corner candidates: max_vertices=12, degrees {3,4,5}, "
                   "restricted vertex patterns, V<=F";

  const std::vector<EmbeddedMap> cands = generate_corner_candidates();
  cat.stats.generator_outputs = static_cast<int>(cands.size());

  // Dual closure, then pair the classes up.
  std::map<Bytes, EmbeddedMap> classes;
  for (const auto& g : cands) {
    for (auto m : {g, dual(g)}) {
      if (!is_tessellation(m).passed)
        throw std::logic_error("corner candidate fails tessellation axioms");
      for (Dart d = 0; d < m.dart_count(); ++d) {
        const Rational c = unit_fraction(m.degree(m.vertex_of(d))) +
                           unit_fraction(m.face_degree(m.face_of(d))) -
                           Rational(1, 2);
        if (!c.positive())
          throw std::logic_error("corner candidate has a non-positive corner");
      }
      classes.emplace(canonical_code(m, IsoMode::OP_OR).bytes, std::move(m));
    }
  }

  std::vector<PairRow> rows;
  std::map<Bytes, bool> used;
  for (const auto& [code, g] : classes) {
    if (used[code]) continue;
    used[code] = true;
    EmbeddedMap gstar = dual(g);
    const Bytes dual_code = canonical_code(gstar, IsoMode::OP_OR).bytes;
    const bool self_dual = dual_code == code;
    if (self_dual) {
      ++cat.stats.self_dual_pairs;
    } else {
      if (!classes.count(dual_code))
        throw std::logic_error("dual closure is not closed");
      used[dual_code] = true;
    }
    rows.push_back(make_row(g, std::move(gstar), self_dual));
    rows.back().front_code =
        canonical_code(rows.back().front, IsoMode::OP_OR).bytes;
  }
  cat.sphere = rows_to_records(std::move(rows), "CC-S2");

  std::vector<EmbeddedMap> all;
  for (const auto& rec : cat.sphere) all.push_back(rec.map);
  int idx = 0;
  for (auto& q : classify_rp2(all, Positivity::corner)) {
    const std::string name = "CC-RP2-E" + std::to_string(q.edge_count) + "-" +
                             std::to_string(++idx) + "V" +
                             std::to_string(q.vertex_count);
    cat.projective.push_back(RP2Record{name, std::move(q)});
  }
  return cat;
}

namespace {

json record_json(const ClassRecord& rec) {
  json j;
  j["name"] = rec.name;
  j["surface"] = "S2";
  j["vertices"] = rec.map.vertex_count();
  j["edges"] = rec.map.edge_count();
  j["faces"] = rec.map.face_count();
  j["connectivity"] = rec.connectivity;
  j["self_dual"] = rec.self_dual;
  j["dual_name"] = rec.dual_name;
  j["adjacency"] = encode_ascii_adjacency(rec.map);
  j["curvature"] = {
      {"min_phi", rational_json(rec.summary.min_phi)},
      {"min_forman", rec.summary.min_forman},
      {"min_corner", rational_json(rec.summary.min_corner)},
      {"min_psi", rational_json(rec.summary.min_psi)},
      {"total_phi", rational_json(rec.summary.total_phi)},
  };
  return j;
}

}  // namespace

json quotient_to_json(const QuotientMap& q) {
  json j;
  const Bytes pc = encode_planar_code({q.cover});
  j["cover"] = json::binary(pc);
  j["deck"] = q.deck.dart_perm;
  j["orientation"] = "reversing";
  j["vertices"] = q.vertex_count;
  j["edges"] = q.edge_count;
  j["faces"] = q.face_count;
  j["euler_characteristic"] = q.euler_characteristic();
  // quotient adjacency for human inspection
  std::vector<int> erep(q.edge_count, -1);
  for (int e = 0; e < q.cover.edge_count(); ++e)
    if (erep[q.edge_orbit[e]] == -1) erep[q.edge_orbit[e]] = e;
  json adj = json::array();
  for (int eo = 0; eo < q.edge_count; ++eo) {
    auto [d, dd] = q.cover.edge_darts(erep[eo]);
    adj.push_back({q.vertex_orbit[q.cover.vertex_of(d)],
                   q.vertex_orbit[q.cover.vertex_of(dd)]});
  }
  j["quotient_edges"] = adj;
  j["gauss_bonnet_total"] = rational_json(quotient_gauss_bonnet(q));
  return j;
}

json catalog_to_json(const Catalog& c) {
  json j;
  j["positivity"] = c.positivity == Positivity::forman ? "forman" : "corner";
  j["provenance"] = c.provenance;
  j["stats"] = {{"generator_outputs", c.stats.generator_outputs},
                {"medial_classes", c.stats.medial_classes},
                {"self_dual_pairs", c.stats.self_dual_pairs}};
  j["sphere"] = json::array();
  for (const auto& rec : c.sphere) j["sphere"].push_back(record_json(rec));
  j["projective"] = json::array();
  for (const auto& r : c.projective) {
    json q = quotient_to_json(r.quotient);
    q["name"] = r.name;
    j["projective"].push_back(std::move(q));
  }
  return j;
}

Bytes catalog_planar_code(const Catalog& c) {
  std::vector<EmbeddedMap> maps;
  for (const auto& rec : c.sphere) maps.push_back(rec.map);
  return encode_planar_code(maps);
}

json report_json(const EmbeddedMap& m, bool with_dual, bool with_medial) {
  json j;
  j["vertices"] = m.vertex_count();
  j["edges"] = m.edge_count();
  j["faces"] = m.face_count();
  j["euler_characteristic"] = m.euler_characteristic();

  const CurvatureReport rep = curvature_report(m);
  json tess;
  tess["passed"] = rep.tessellation.passed;
  tess["violations"] = json::array();
  for (const auto& v : rep.tessellation.violations)
    tess["violations"].push_back(
        {{"axiom", to_string(v.axiom)}, {"witness", v.witness}});
  j["tessellation"] = std::move(tess);

  json curv;
  curv["vertex_phi"] = json::array();
  for (const auto& r : rep.vertex_phi) curv["vertex_phi"].push_back(rational_json(r));
  curv["edge_forman"] = rep.edge_forman;
  curv["edge_psi"] = json::array();
  for (const auto& r : rep.edge_psi) curv["edge_psi"].push_back(rational_json(r));
  curv["corner_by_dart"] = json::array();
  for (const auto& r : rep.corner_values)
    curv["corner_by_dart"].push_back(rational_json(r));
  curv["total_phi"] = rational_json(rep.total_phi);
  curv["min_phi"] = rational_json(rep.min_phi);
  curv["min_forman"] = rep.min_forman;
  curv["min_corner"] = rational_json(rep.min_corner);
  curv["min_psi"] = rational_json(rep.min_psi);
  j["curvature"] = std::move(curv);

  if (with_dual) j["dual"] = report_json(dual(m), false, false);
  if (with_medial) j["medial"] = report_json(medial(m), false, false);
  return j;
}

}  // namespace curv
