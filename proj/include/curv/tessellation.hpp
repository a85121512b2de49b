#pragma once

#include <string>
#include <vector>

#include "curv/map.hpp"

namespace curv {

enum class TessAxiom {
  disk_face,
  two_faces_per_edge,
  intersection,
  min_vertex_degree,
  min_face_degree,
  simplicity,
};

std::string to_string(TessAxiom a);

struct TessViolation {
  TessAxiom axiom;
  std::vector<int> witness;  // offending element ids (faces/edges/vertices)
};

struct TessellationReport {
  bool passed = false;
  std::vector<TessViolation> violations;
};

enum class FaceMeet { empty, one_vertex, one_edge, violation };

struct FaceMeetResult {
  FaceMeet kind;
  std::vector<int> shared_vertices;
  std::vector<int> shared_edges;
};

// Classifies the intersection of two closed faces: disjoint, exactly one
// vertex, or exactly one edge together with its two endpoints. Anything else
// breaks the tessellation axioms.
FaceMeetResult face_closure_intersection(const EmbeddedMap& m, int f1, int f2);

// Checks the tessellation axioms on a finite sphere map: simple graph, every
// face walk a simple cycle (closed faces are disks), two distinct faces per
// edge, well-behaved pairwise face intersections, all degrees at least 3.
// The compact-cover axiom is vacuous for finite maps. Failures are reported
// with witnesses, never thrown.
TessellationReport is_tessellation(const EmbeddedMap& m);

}  // namespace curv
