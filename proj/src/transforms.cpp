#include "curv/transforms.hpp"

#include <numeric>
#include <stdexcept>

namespace curv {

EmbeddedMap dual(const EmbeddedMap& m) {
  const int n = m.dart_count();
  std::vector<int> sigma(n);
  for (Dart d = 0; d < n; ++d) sigma[d] = m.phi(d);
  return EmbeddedMap(std::move(sigma), m.alpha_perm());
}

EmbeddedMap medial(const EmbeddedMap& m) {
  for (int v = 0; v < m.vertex_count(); ++v)
    if (m.degree(v) < 2)
      throw std::invalid_argument("medial requires minimum degree 2");

  // Medial darts: 2d is the dart of the edge through corner (d, sigma(d))
  // attached at the midpoint of edge(d); 2d+1 is its reversal at the midpoint
  // of edge(sigma(d)). Rotation at a midpoint M_e with e = {d, alpha(d)}:
  //   2d -> 2*sigma_inv(d)+1 -> 2*alpha(d) -> 2*sigma_inv(alpha(d))+1 -> 2d.
  const int n = m.dart_count();
  std::vector<int> sigma(2 * n), alpha(2 * n);
  for (Dart d = 0; d < n; ++d) {
    sigma[2 * d] = 2 * m.sigma_inv(d) + 1;
    sigma[2 * d + 1] = 2 * m.alpha(m.sigma(d));
    alpha[2 * d] = 2 * d + 1;
    alpha[2 * d + 1] = 2 * d;
  }
  return EmbeddedMap(std::move(sigma), std::move(alpha));
}

int medial_vertex_of_edge(const EmbeddedMap& medial_map,
                          const EmbeddedMap& input, int e) {
  return medial_map.vertex_of(2 * input.edge_darts(e).first);
}

FaceBipartition face_two_coloring(const EmbeddedMap& m) {
  for (int v = 0; v < m.vertex_count(); ++v)
    if (m.degree(v) != 4)
      throw std::invalid_argument("face 2-coloring requires a 4-regular map");

  // Union faces that are right across from each other at some vertex.
  std::vector<int> parent(m.face_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int v = 0; v < m.vertex_count(); ++v) {
    const auto& ds = m.vertex_darts(v);
    for (int i = 0; i < 2; ++i) {
      int a = find(m.face_of(ds[i])), b = find(m.face_of(ds[i + 2]));
      if (a != b) parent[a] = b;
    }
  }

  const int c0 = find(m.face_of(0));
  FaceBipartition bp;
  bp.class_of.resize(m.face_count());
  int nclasses = 0;
  int other = -1;
  for (int f = 0; f < m.face_count(); ++f) {
    int r = find(f);
    if (r == c0) {
      bp.class_of[f] = 0;
    } else {
      if (other == -1) {
        other = r;
        nclasses = 2;
      }
      if (r != other)
        throw std::invalid_argument("across-relation has more than two classes");
      bp.class_of[f] = 1;
    }
  }
  if (nclasses != 2)
    throw std::invalid_argument("across-relation has index one, not 2-colorable");
  return bp;
}

namespace {

// Restriction of the input to the darts whose face lies in one color class:
// sigma = phi restricted (walks of class faces), alpha = sigma^2 (pairing the
// two opposite corners at each 4-valent vertex).
EmbeddedMap class_graph(const EmbeddedMap& m, const FaceBipartition& bp, int cls) {
  const int n = m.dart_count();
  std::vector<int> idx(n, -1);
  std::vector<int> darts;
  for (Dart d = 0; d < n; ++d)
    if (bp.class_of[m.face_of(d)] == cls) {
      idx[d] = static_cast<int>(darts.size());
      darts.push_back(d);
    }
  std::vector<int> sigma(darts.size()), alpha(darts.size());
  for (int i = 0; i < static_cast<int>(darts.size()); ++i) {
    const Dart d = darts[i];
    sigma[i] = idx[m.phi(d)];
    const Dart opp = m.sigma(m.sigma(d));
    if (idx[opp] < 0)
      throw std::invalid_argument("face colors do not alternate around a vertex");
    alpha[i] = idx[opp];
  }
  return EmbeddedMap(std::move(sigma), std::move(alpha));
}

}  // namespace

DualPair inverse_medial(const EmbeddedMap& m) {
  const FaceBipartition bp = face_two_coloring(m);
  EmbeddedMap g0 = class_graph(m, bp, 0);
  EmbeddedMap g1 = class_graph(m, bp, 1);
  const auto c0 = canonical_code(g0, IsoMode::OP_OR);
  const auto c1 = canonical_code(g1, IsoMode::OP_OR);
  const bool swap = c1 < c0;
  DualPair pair{swap ? std::move(g1) : std::move(g0),
                swap ? std::move(g0) : std::move(g1),
                c0 == c1,
                canonical_code(m, IsoMode::OP_OR)};
  return pair;
}

bool is_self_dual(const EmbeddedMap& m) {
  return are_isomorphic(m, dual(m)) != IsoClass::None;
}

}  // namespace curv
