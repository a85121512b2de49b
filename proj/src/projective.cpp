#include "curv/projective.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "curv/curvature.hpp"

namespace curv {

namespace {

bool qualifies(const EmbeddedMap& m, const MapAutomorphism& a) {
  if (!a.orientation_reversing) return false;
  const auto& p = a.dart_perm;
  for (int d = 0; d < m.dart_count(); ++d)
    if (p[p[d]] != d) return false;
  bool identity = true;
  for (int d = 0; d < m.dart_count(); ++d)
    if (p[d] != d) identity = false;
  if (identity) return false;
  for (int d = 0; d < m.dart_count(); ++d) {
    if (m.vertex_of(p[d]) == m.vertex_of(d)) return false;       // fixed vertex
    if (p[d] == m.alpha(d)) return false;                        // fixed edge
    if (m.face_of(p[d]) == m.face_of(d)) return false;           // fixed face
  }
  return true;
}

}  // namespace

std::vector<MapAutomorphism> antipodal_involutions(const EmbeddedMap& m) {
  std::vector<MapAutomorphism> out;
  for (auto& a : automorphism_group(m))
    if (qualifies(m, a)) out.push_back(std::move(a));
  return out;
}

QuotientMap quotient(const EmbeddedMap& m, const MapAutomorphism& deck) {
  if (!qualifies(m, deck))
    throw std::invalid_argument(
        "deck map must be an orientation-reversing involution free of fixed "
        "vertices, edges and faces");

  QuotientMap q{m, deck, {}, {}, {}, 0, 0, 0, {}, {}};
  const auto& p = deck.dart_perm;

  auto orbits = [](int count, auto image) {
    std::vector<int> orbit(count, -1);
    int next = 0;
    for (int i = 0; i < count; ++i) {
      if (orbit[i] != -1) continue;
      orbit[i] = next;
      orbit[image(i)] = next;
      ++next;
    }
    return std::pair(orbit, next);
  };

  std::vector<int> dart_vertex_image(m.dart_count());
  for (int d = 0; d < m.dart_count(); ++d) dart_vertex_image[d] = p[d];

  auto vimage = [&](int v) { return m.vertex_of(p[m.vertex_darts(v)[0]]); };
  auto eimage = [&](int e) { return m.edge_of(p[m.edge_darts(e).first]); };
  auto fimage = [&](int f) { return m.face_of(p[m.face_walks()[f][0]]); };

  std::tie(q.vertex_orbit, q.vertex_count) = orbits(m.vertex_count(), vimage);
  std::tie(q.edge_orbit, q.edge_count) = orbits(m.edge_count(), eimage);
  std::tie(q.face_orbit, q.face_count) = orbits(m.face_count(), fimage);

  if (2 * q.vertex_count != m.vertex_count() ||
      2 * q.edge_count != m.edge_count() || 2 * q.face_count != m.face_count())
    throw std::logic_error("deck orbits do not halve the cell counts");

  q.face_rep.assign(q.face_count, -1);
  for (int f = 0; f < m.face_count(); ++f)
    if (q.face_rep[q.face_orbit[f]] == -1) q.face_rep[q.face_orbit[f]] = f;
  for (int fo = 0; fo < q.face_count; ++fo) {
    std::vector<std::pair<int, int>> walk;
    for (Dart d : m.face_walks()[q.face_rep[fo]])
      walk.emplace_back(q.vertex_orbit[m.vertex_of(d)], q.edge_orbit[m.edge_of(d)]);
    q.face_walks.push_back(std::move(walk));
  }
  return q;
}

TessellationReport quotient_is_tessellation(const QuotientMap& q) {
  TessellationReport rep;
  const EmbeddedMap& m = q.cover;

  // Representative lifts per orbit.
  std::vector<int> vrep(q.vertex_count, -1), erep(q.edge_count, -1);
  for (int v = 0; v < m.vertex_count(); ++v)
    if (vrep[q.vertex_orbit[v]] == -1) vrep[q.vertex_orbit[v]] = v;
  for (int e = 0; e < m.edge_count(); ++e)
    if (erep[q.edge_orbit[e]] == -1) erep[q.edge_orbit[e]] = e;

  // Simplicity of the quotient graph.
  {
    std::map<std::pair<int, int>, int> seen;
    for (int eo = 0; eo < q.edge_count; ++eo) {
      auto [d, dd] = m.edge_darts(erep[eo]);
      const int u = q.vertex_orbit[m.vertex_of(d)];
      const int v = q.vertex_orbit[m.vertex_of(dd)];
      if (u == v) {
        rep.violations.push_back({TessAxiom::simplicity, {eo}});
        continue;
      }
      auto key = std::minmax(u, v);
      auto [it, fresh] = seen.insert({{key.first, key.second}, eo});
      if (!fresh) rep.violations.push_back({TessAxiom::simplicity, {it->second, eo}});
    }
  }

  for (int vo = 0; vo < q.vertex_count; ++vo)
    if (m.degree(vrep[vo]) < 3)
      rep.violations.push_back({TessAxiom::min_vertex_degree, {vo}});
  for (int fo = 0; fo < q.face_count; ++fo)
    if (q.face_walks[fo].size() < 3)
      rep.violations.push_back({TessAxiom::min_face_degree, {fo}});

  // Disk faces: the projected walk must repeat no vertex and no edge orbit.
  std::vector<char> simple_walk(q.face_count, 1);
  for (int fo = 0; fo < q.face_count; ++fo) {
    std::set<int> vs, es;
    for (auto [vo, eo] : q.face_walks[fo]) {
      if (!vs.insert(vo).second || !es.insert(eo).second) {
        rep.violations.push_back({TessAxiom::disk_face, {fo}});
        simple_walk[fo] = 0;
        break;
      }
    }
  }

  for (int eo = 0; eo < q.edge_count; ++eo) {
    auto [d, dd] = m.edge_darts(erep[eo]);
    if (q.face_orbit[m.face_of(d)] == q.face_orbit[m.face_of(dd)])
      rep.violations.push_back({TessAxiom::two_faces_per_edge, {eo}});
  }

  auto orbit_sets = [&](int fo) {
    std::set<int> vs, es;
    for (auto [vo, eo] : q.face_walks[fo]) {
      vs.insert(vo);
      es.insert(eo);
    }
    return std::pair(vs, es);
  };
  for (int f1 = 0; f1 < q.face_count; ++f1) {
    if (!simple_walk[f1]) continue;
    auto [v1, e1] = orbit_sets(f1);
    for (int f2 = f1 + 1; f2 < q.face_count; ++f2) {
      if (!simple_walk[f2]) continue;
      auto [v2, e2] = orbit_sets(f2);
      std::vector<int> sv, se;
      std::set_intersection(v1.begin(), v1.end(), v2.begin(), v2.end(),
                            std::back_inserter(sv));
      std::set_intersection(e1.begin(), e1.end(), e2.begin(), e2.end(),
                            std::back_inserter(se));
      bool ok = false;
      if (se.empty() && sv.empty()) ok = true;
      else if (se.empty() && sv.size() == 1) ok = true;
      else if (se.size() == 1 && sv.size() == 2) {
        auto [d, dd] = m.edge_darts(erep[se[0]]);
        std::set<int> ends{q.vertex_orbit[m.vertex_of(d)],
                           q.vertex_orbit[m.vertex_of(dd)]};
        ok = ends == std::set<int>(sv.begin(), sv.end());
      }
      if (!ok) rep.violations.push_back({TessAxiom::intersection, {f1, f2}});
    }
  }

  rep.passed = rep.violations.empty();
  return rep;
}

Rational quotient_gauss_bonnet(const QuotientMap& q) {
  std::vector<int> vrep(q.vertex_count, -1);
  for (int v = 0; v < q.cover.vertex_count(); ++v)
    if (vrep[q.vertex_orbit[v]] == -1) vrep[q.vertex_orbit[v]] = v;
  Rational total;
  for (int vo = 0; vo < q.vertex_count; ++vo)
    total += combinatorial_curvature(q.cover, vrep[vo]);
  return total;
}

Bytes quotient_canonical_code(const QuotientMap& q) {
  // Minimal BFS word of (sigma, alpha), both orientations, extended with the
  // deck image labels; canonical under simultaneous relabeling.
  const EmbeddedMap& m = q.cover;
  const int n = m.dart_count();
  const auto& p = q.deck.dart_perm;

  Bytes best;
  for (int reversed = 0; reversed < 2; ++reversed) {
    const auto& next = reversed ? m.sigma_inv_perm() : m.sigma_perm();
    for (int r = 0; r < n; ++r) {
      std::vector<int> label(n, -1), order;
      order.push_back(r);
      label[r] = 0;
      for (int i = 0; i < static_cast<int>(order.size()); ++i) {
        const int d = order[i];
        for (int e : {next[d], m.alpha(d)}) {
          if (label[e] == -1) {
            label[e] = static_cast<int>(order.size());
            order.push_back(e);
          }
        }
      }
      Bytes w;
      w.reserve(3 * n);
      for (int d : order) {
        w.push_back(static_cast<std::uint8_t>(label[next[d]]));
        w.push_back(static_cast<std::uint8_t>(label[m.alpha(d)]));
      }
      for (int d : order) w.push_back(static_cast<std::uint8_t>(label[p[d]]));
      if (best.empty() || w < best) best = std::move(w);
    }
  }
  return best;
}

std::vector<QuotientMap> classify_rp2(const std::vector<EmbeddedMap>& sphere_catalog,
                                      Positivity positivity) {
  std::map<Bytes, QuotientMap> found;
  for (const auto& m : sphere_catalog) {
    for (const auto& inv : antipodal_involutions(m)) {
      QuotientMap q = quotient(m, inv);
      if (!quotient_is_tessellation(q).passed) continue;
      // Positivity is inherited from the cover: every quotient cell has the
      // degrees of its lifts. Assert rather than assume.
      bool positive = true;
      if (positivity == Positivity::forman) {
        for (int e = 0; e < m.edge_count() && positive; ++e)
          if (forman_formula(m, e) <= 0) positive = false;
      } else {
        for (Dart d = 0; d < m.dart_count() && positive; ++d) {
          const Rational c = unit_fraction(m.degree(m.vertex_of(d))) +
                             unit_fraction(m.face_degree(m.face_of(d))) -
                             Rational(1, 2);
          if (!c.positive()) positive = false;
        }
      }
      if (!positive)
        throw std::logic_error("catalog member lost positivity in RP2 scan");
      found.emplace(quotient_canonical_code(q), std::move(q));
    }
  }
  std::vector<QuotientMap> out;
  out.reserve(found.size());
  for (auto& [code, q] : found) out.push_back(std::move(q));
  return out;
}

}  // namespace curv
