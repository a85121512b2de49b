#include "curv/curvature.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace curv {

std::vector<int> vertex_pattern(const EmbeddedMap& m, int v) {
  std::vector<int> p;
  for (Dart d : m.vertex_darts(v)) p.push_back(m.face_degree(m.face_of(d)));
  std::sort(p.begin(), p.end());
  return p;
}

std::vector<int> face_pattern(const EmbeddedMap& m, int f) {
  std::vector<int> p;
  for (Dart d : m.face_walks()[f]) p.push_back(m.degree(m.vertex_of(d)));
  std::sort(p.begin(), p.end());
  return p;
}

Rational combinatorial_curvature(const EmbeddedMap& m, int v) {
  Rational phi = Rational(1) - Rational(m.degree(v), 2);
  for (Dart d : m.vertex_darts(v))
    phi += unit_fraction(m.face_degree(m.face_of(d)));
  return phi;
}

Rational corner_curvature(const EmbeddedMap& m, int v, int f) {
  bool incident = false;
  for (Dart d : m.vertex_darts(v))
    if (m.face_of(d) == f) incident = true;
  if (!incident) throw std::invalid_argument("corner_curvature: (v,f) not incident");
  return unit_fraction(m.degree(v)) + unit_fraction(m.face_degree(f)) - Rational(1, 2);
}

int forman_definitional(const EmbeddedMap& m, int e) {
  const auto [d, dd] = m.edge_darts(e);
  const std::set<int> verts{m.vertex_of(d), m.vertex_of(dd)};
  const std::set<int> faces{m.face_of(d), m.face_of(dd)};

  int parallel = 0;
  for (int e2 = 0; e2 < m.edge_count(); ++e2) {
    if (e2 == e) continue;
    const auto [g, gg] = m.edge_darts(e2);
    const bool shares_vertex =
        verts.count(m.vertex_of(g)) || verts.count(m.vertex_of(gg));
    const bool shares_face =
        faces.count(m.face_of(g)) || faces.count(m.face_of(gg));
    if (shares_vertex != shares_face) ++parallel;
  }
  return static_cast<int>(faces.size()) + static_cast<int>(verts.size()) - parallel;
}

int forman_formula(const EmbeddedMap& m, int e) {
  const auto [d, dd] = m.edge_darts(e);
  return 16 - (m.degree(m.vertex_of(d)) + m.degree(m.vertex_of(dd)) +
               m.face_degree(m.face_of(d)) + m.face_degree(m.face_of(dd)));
}

Rational edge_mean_curvature(const EmbeddedMap& m, int e) {
  const auto [d, dd] = m.edge_darts(e);
  return unit_fraction(m.degree(m.vertex_of(d))) +
         unit_fraction(m.degree(m.vertex_of(dd))) +
         unit_fraction(m.face_degree(m.face_of(d))) +
         unit_fraction(m.face_degree(m.face_of(dd))) - Rational(1);
}

Rational gauss_bonnet_total(const EmbeddedMap& m) {
  Rational total;
  for (int v = 0; v < m.vertex_count(); ++v)
    total += combinatorial_curvature(m, v);
  return total;
}

CurvatureReport curvature_report(const EmbeddedMap& m) {
  CurvatureReport r;
  for (int v = 0; v < m.vertex_count(); ++v)
    r.vertex_phi.push_back(combinatorial_curvature(m, v));
  for (int e = 0; e < m.edge_count(); ++e) {
    r.edge_forman.push_back(forman_definitional(m, e));
    r.edge_psi.push_back(edge_mean_curvature(m, e));
  }
  for (Dart d = 0; d < m.dart_count(); ++d)
    r.corner_values.push_back(unit_fraction(m.degree(m.vertex_of(d))) +
                              unit_fraction(m.face_degree(m.face_of(d))) -
                              Rational(1, 2));
  r.total_phi = gauss_bonnet_total(m);
  r.min_phi = *std::min_element(r.vertex_phi.begin(), r.vertex_phi.end());
  r.min_forman = *std::min_element(r.edge_forman.begin(), r.edge_forman.end());
  r.min_corner = *std::min_element(r.corner_values.begin(), r.corner_values.end());
  r.min_psi = *std::min_element(r.edge_psi.begin(), r.edge_psi.end());
  r.tessellation = is_tessellation(m);
  return r;
}

}  // namespace curv
