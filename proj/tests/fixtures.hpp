#pragma once

// Named maps used across the test suites. Each builder constructs an explicit
// counter-clockwise rotation system; the face-tracing in EmbeddedMap plus the
// count checks in the tests validate the embeddings.

#include <stdexcept>
#include <vector>

#include "curv/codec.hpp"
#include "curv/map.hpp"
#include "curv/transforms.hpp"

namespace fixtures {

using curv::EmbeddedMap;

// n-cycle embedded in the sphere (two n-gon faces).
inline EmbeddedMap cycle(int n) {
  std::vector<std::vector<int>> rot(n);
  for (int i = 0; i < n; ++i) rot[i] = {(i + 1) % n, (i + n - 1) % n};
  return curv::build_map(rot);
}

// Star K_{1,n}: hub 0, leaves 1..n.
inline EmbeddedMap star(int n) {
  std::vector<std::vector<int>> rot(n + 1);
  for (int i = 1; i <= n; ++i) {
    rot[0].push_back(i);
    rot[i] = {0};
  }
  return curv::build_map(rot);
}

// Wheel: hub 0 joined to an n-cycle 1..n. n = 3 gives the tetrahedron.
inline EmbeddedMap pyramid(int n) {
  std::vector<std::vector<int>> rot(n + 1);
  for (int i = 0; i < n; ++i) {
    const int v = 1 + i, nxt = 1 + (i + 1) % n, prv = 1 + (i + n - 1) % n;
    rot[0].push_back(v);
    rot[v] = {nxt, 0, prv};
  }
  return curv::build_map(rot);
}

inline EmbeddedMap tetrahedron() { return pyramid(3); }

// n-gonal prism; inner ring t_i = i, outer ring b_i = n + i. n = 4: cube.
inline EmbeddedMap prism(int n) {
  std::vector<std::vector<int>> rot(2 * n);
  for (int i = 0; i < n; ++i) {
    const int t = i, b = n + i;
    rot[t] = {b, (i + 1) % n, (i + n - 1) % n};
    rot[b] = {n + (i + 1) % n, t, n + (i + n - 1) % n};
  }
  return curv::build_map(rot);
}

inline EmbeddedMap cube() { return prism(4); }

inline EmbeddedMap bipyramid(int n) { return curv::dual(prism(n)); }

inline EmbeddedMap octahedron() { return bipyramid(4); }

// n-gonal antiprism; ring t_i = i inside, ring b_i = n + i outside, with
// t_i ~ b_i and t_i ~ b_{i-1}.
inline EmbeddedMap antiprism(int n) {
  std::vector<std::vector<int>> rot(2 * n);
  for (int i = 0; i < n; ++i) {
    const int t = i, b = n + i;
    rot[t] = {b, (i + 1) % n, (i + n - 1) % n, n + (i + n - 1) % n};
    rot[b] = {n + (i + 1) % n, (i + 1) % n, t, n + (i + n - 1) % n};
  }
  return curv::build_map(rot);
}

// Icosahedron: 5-antiprism capped with an apex over each pentagon.
inline EmbeddedMap icosahedron() {
  // inner ring 0..4, outer ring 5..9, inner apex 10, outer apex 11.
  std::vector<std::vector<int>> rot(12);
  const int n = 5;
  for (int i = 0; i < n; ++i) {
    const int t = i, b = n + i;
    const int tn = (i + 1) % n, tp = (i + n - 1) % n;
    rot[t] = {b, tn, 10, tp, n + (i + n - 1) % n};
    rot[b] = {n + (i + 1) % n, tn, t, n + (i + n - 1) % n, 11};
    rot[10].push_back(t);
  }
  for (int i = n - 1; i >= 0; --i) rot[11].push_back(n + i);
  return curv::build_map(rot);
}

inline EmbeddedMap dodecahedron() { return curv::dual(icosahedron()); }

inline EmbeddedMap cuboctahedron() { return curv::medial(cube()); }

// The worked adjacency-list example graph and its mirror image.
inline EmbeddedMap fig_graph() {
  return curv::decode_ascii_adjacency("a:bcde, b:caf, c:dab, d:eacf, e:dfa, f:bed");
}

inline EmbeddedMap fig_graph_mirror() {
  return curv::decode_ascii_adjacency("a:edcb, b:fac, c:bad, d:fcae, e:afd, f:deb");
}

// 6-vertex, 10-edge graph with a 2-cut {a, c}; rotations read off planar
// coordinates.
inline EmbeddedMap dagger_graph() {
  return curv::decode_ascii_adjacency("a:bdfe, b:cda, c:befd, d:bca, e:afc, f:cea");
}

// Augment face f of m with a new apex joined to every vertex of the face
// (the face must have a simple walk).
inline EmbeddedMap augment_face(const EmbeddedMap& m, int f) {
  auto rot = m.rotation_lists();
  const auto& walk = m.face_walks()[f];
  const int apex = m.vertex_count();
  // The apex sees the boundary in reversed walk order; at each walk vertex
  // the spoke lands in the corner right before the outgoing face dart.
  std::vector<int> apex_rot;
  for (auto it = walk.rbegin(); it != walk.rend(); ++it)
    apex_rot.push_back(m.vertex_of(*it));
  for (curv::Dart d : walk) {
    const int v = m.vertex_of(d);
    const auto& ds = m.vertex_darts(v);
    int pos = -1;
    for (int i = 0; i < static_cast<int>(ds.size()); ++i)
      if (ds[i] == d) pos = i;
    if (pos < 0) throw std::logic_error("dart missing");
    rot[v].insert(rot[v].begin() + pos, apex);
  }
  rot.push_back(apex_rot);
  return curv::build_map(rot);
}

// Elongated square pyramid: cube with one face augmented.
inline EmbeddedMap elongated_square_pyramid() { return augment_face(cube(), 0); }

}  // namespace fixtures
