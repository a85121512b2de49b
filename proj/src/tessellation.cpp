#include "curv/tessellation.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace curv {

std::string to_string(TessAxiom a) {
  switch (a) {
    case TessAxiom::disk_face: return "disk_face";
    case TessAxiom::two_faces_per_edge: return "two_faces_per_edge";
    case TessAxiom::intersection: return "intersection";
    case TessAxiom::min_vertex_degree: return "min_vertex_degree";
    case TessAxiom::min_face_degree: return "min_face_degree";
    case TessAxiom::simplicity: return "simplicity";
  }
  return "?";
}

namespace {

std::set<int> walk_vertices(const EmbeddedMap& m, int f) {
  std::set<int> out;
  for (Dart d : m.face_walks()[f]) out.insert(m.vertex_of(d));
  return out;
}

std::set<int> walk_edges(const EmbeddedMap& m, int f) {
  std::set<int> out;
  for (Dart d : m.face_walks()[f]) out.insert(m.edge_of(d));
  return out;
}

}  // namespace

FaceMeetResult face_closure_intersection(const EmbeddedMap& m, int f1, int f2) {
  FaceMeetResult r;
  const auto v1 = walk_vertices(m, f1), v2 = walk_vertices(m, f2);
  const auto e1 = walk_edges(m, f1), e2 = walk_edges(m, f2);
  std::set_intersection(v1.begin(), v1.end(), v2.begin(), v2.end(),
                        std::back_inserter(r.shared_vertices));
  std::set_intersection(e1.begin(), e1.end(), e2.begin(), e2.end(),
                        std::back_inserter(r.shared_edges));

  if (r.shared_edges.empty() && r.shared_vertices.empty()) {
    r.kind = FaceMeet::empty;
  } else if (r.shared_edges.empty() && r.shared_vertices.size() == 1) {
    r.kind = FaceMeet::one_vertex;
  } else if (r.shared_edges.size() == 1 && r.shared_vertices.size() == 2) {
    auto [d, dd] = m.edge_darts(r.shared_edges[0]);
    std::set<int> ends{m.vertex_of(d), m.vertex_of(dd)};
    r.kind = (ends == std::set<int>(r.shared_vertices.begin(), r.shared_vertices.end()))
                 ? FaceMeet::one_edge
                 : FaceMeet::violation;
  } else {
    r.kind = FaceMeet::violation;
  }
  return r;
}

TessellationReport is_tessellation(const EmbeddedMap& m) {
  TessellationReport rep;

  // Simplicity: no loops, no parallel edges.
  {
    std::map<std::pair<int, int>, int> seen;
    for (int e = 0; e < m.edge_count(); ++e) {
      auto [d, dd] = m.edge_darts(e);
      const int u = m.vertex_of(d), v = m.vertex_of(dd);
      if (u == v) {
        rep.violations.push_back({TessAxiom::simplicity, {e}});
        continue;
      }
      auto key = std::minmax(u, v);
      auto [it, fresh] = seen.insert({{key.first, key.second}, e});
      if (!fresh) rep.violations.push_back({TessAxiom::simplicity, {it->second, e}});
    }
  }

  for (int v = 0; v < m.vertex_count(); ++v)
    if (m.degree(v) < 3)
      rep.violations.push_back({TessAxiom::min_vertex_degree, {v}});
  for (int f = 0; f < m.face_count(); ++f)
    if (m.face_degree(f) < 3)
      rep.violations.push_back({TessAxiom::min_face_degree, {f}});

  // Disk condition: the boundary walk of every closed face visits no vertex
  // and no edge twice.
  std::vector<char> simple_walk(m.face_count(), 1);
  for (int f = 0; f < m.face_count(); ++f) {
    const auto& walk = m.face_walks()[f];
    std::set<int> vs, es;
    for (Dart d : walk) {
      if (!vs.insert(m.vertex_of(d)).second || !es.insert(m.edge_of(d)).second) {
        rep.violations.push_back({TessAxiom::disk_face, {f}});
        simple_walk[f] = 0;
        break;
      }
    }
  }

  for (int e = 0; e < m.edge_count(); ++e) {
    auto [d, dd] = m.edge_darts(e);
    if (m.face_of(d) == m.face_of(dd))
      rep.violations.push_back({TessAxiom::two_faces_per_edge, {e}});
  }

  for (int f1 = 0; f1 < m.face_count(); ++f1) {
    if (!simple_walk[f1]) continue;  // already reported as a non-disk
    for (int f2 = f1 + 1; f2 < m.face_count(); ++f2) {
      if (!simple_walk[f2]) continue;
      if (face_closure_intersection(m, f1, f2).kind == FaceMeet::violation)
        rep.violations.push_back({TessAxiom::intersection, {f1, f2}});
    }
  }

  rep.passed = rep.violations.empty();
  return rep;
}

}  // namespace curv
