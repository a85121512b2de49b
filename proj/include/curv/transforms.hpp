#pragma once

#include <vector>

#include "curv/map.hpp"

namespace curv {

// Dual map: vertices and faces swap, edge set fixed. On the dart level this is
// (sigma, alpha) -> (sigma∘alpha, alpha), so dual(dual(m)) is m itself, not
// merely isomorphic. Dart and edge ids are preserved.
EmbeddedMap dual(const EmbeddedMap& m);

// Medial map: one 4-valent vertex per edge of the input, one edge per corner
// of the input. Requires minimum degree 2. Multigraph outputs are legitimate
// (the medial of a triangle doubles every edge); for tessellation inputs the
// result is again a tessellation.
//
// Dart layout guarantee: input dart d contributes medial darts 2d and 2d+1,
// and medial dart 2d is attached at the medial vertex of edge_of(d). The
// medial vertex of input edge e is therefore
//   medial.vertex_of(2 * first_dart_of(e)).
EmbeddedMap medial(const EmbeddedMap& m);

// Medial vertex index of input edge e under the layout guarantee above.
int medial_vertex_of_edge(const EmbeddedMap& medial_map,
                          const EmbeddedMap& input, int e);

// The two classes of the equivalence relation generated by "right across from"
// at 4-valent vertices. class_of[f] is 0 for the class containing face 0.
struct FaceBipartition {
  std::vector<int> class_of;
  std::vector<int> faces_in(int cls) const {
    std::vector<int> out;
    for (int f = 0; f < static_cast<int>(class_of.size()); ++f)
      if (class_of[f] == cls) out.push_back(f);
    return out;
  }
};

// Throws unless the map is 4-regular; reports an error if the relation does
// not have index two (impossible for sphere medials, checked anyway).
FaceBipartition face_two_coloring(const EmbeddedMap& m);

// The unique dual pair recovered from a 2-face-colorable 4-regular map.
// Pair order is normalized by canonical code so output is deterministic.
struct DualPair {
  EmbeddedMap primal;
  EmbeddedMap dual;
  bool self_dual;
  CanonicalCode source;  // OP_OR code of the medial map both sides share
};

DualPair inverse_medial(const EmbeddedMap& m);

// are_isomorphic(m, dual(m)) != None; mirror images count as equal.
bool is_self_dual(const EmbeddedMap& m);

}  // namespace curv
