#pragma once

#include <array>
#include <vector>

#include "curv/map.hpp"

namespace curv {

// Face patterns with degree sum at most 15; a quadrangulation face has one of
// these iff the corresponding medial vertex sees only positive-curvature
// edges.
extern const std::vector<std::array<int, 4>> kVpPatterns;

struct QuadConstraints {
  int max_faces = 24;
  // Sorted 4-tuples; empty means no pattern filter.
  std::vector<std::array<int, 4>> allowed_face_patterns;
  bool require_simple = true;
  bool require_two_connected = true;
};

// 2p-cycle rim with two hubs on alternating rim vertices: the quadrangulation
// seeds. p = 3 is the cube.
EmbeddedMap pseudo_double_wheel(int p);

enum class ExpansionKind {
  // New degree-2 vertex joined to a diagonal of one face, splitting it in two.
  diagonal_vertex,
  // Split a vertex in two along a chord of its rotation; the inverse of
  // contracting a face along a diagonal.
  vertex_split,
};

struct ExpansionSite {
  // diagonal_vertex: dart_a lies on the face, the new vertex joins the source
  // of dart_a and the opposite walk vertex. vertex_split: dart_a and dart_b
  // are distinct darts at the vertex being split; the copies keep the rotation
  // segments dart_a..dart_b and dart_b..dart_a.
  int dart_a = -1;
  int dart_b = -1;
};

// Applies one expansion to a simple quadrangulation; the result has one more
// face and stays simple and 2-connected. Throws on an ill-formed site.
EmbeddedMap apply_expansion(const EmbeddedMap& q, ExpansionKind kind,
                            ExpansionSite site);

// Complete, duplicate-free (mirror images identified) list of simple
// 2-connected spherical quadrangulations meeting the constraints, sorted by
// canonical code. Unfiltered runs use the seed-and-expand closure; runs with a
// face-pattern filter use the pruned boundary-growth search (the closure
// cannot prune soundly mid-stream).
std::vector<EmbeddedMap> generate_quadrangulations(const QuadConstraints& c);

// Independent oracle: direct search over rotation systems, assembling all
// ways of gluing degree-4 faces into a sphere. Refuses bounds above 12 faces.
// reverse_scan flips the internal enumeration order; the output set must not
// change.
std::vector<EmbeddedMap> brute_force_quadrangulations(int max_faces,
                                                      bool reverse_scan = false);

struct CornerConstraints {
  int max_vertices = 12;
  std::vector<int> vertex_degrees = {3, 4, 5};
  std::vector<int> face_degrees = {3, 4, 5};
  // Sorted degree lists of the faces around a vertex.
  std::vector<std::vector<int>> allowed_vertex_patterns = {
      {3, 3, 3},       {3, 3, 4},    {3, 3, 5},    {3, 4, 4},
      {3, 4, 5},       {3, 5, 5},    {4, 4, 4},    {4, 4, 5},
      {4, 5, 5},       {5, 5, 5},    {3, 3, 3, 3}, {3, 3, 3, 3, 3}};
  bool require_v_le_f = true;
};

// All simple 2-connected sphere tessellations meeting the corner constraints,
// duplicate-free and code-sorted; every output passes tessellation validation.
std::vector<EmbeddedMap> generate_corner_candidates(const CornerConstraints& c = {});

// One row of the degree-combination system: vertex/face counts by degree and
// vertex counts by pattern, for graphs with all degrees in {3,4,5}.
struct DegreeCombination {
  int v3 = 0, v4 = 0, v5 = 0;
  int f3 = 0, f4 = 0, f5 = 0;
  int v = 0, e = 0, f = 0;
  // n_p for p = 333,334,335,344,345,355,444,445,455,555.
  std::array<int, 10> n{};

  bool operator==(const DegreeCombination&) const = default;
};

extern const std::array<const char*, 10> kPatternNames;

// All non-negative integer solutions of the counting system with
// v_min <= v <= v_max, sorted by (v, v3, v4, v5, n).
std::vector<DegreeCombination> degree_combination_solutions(int v_min, int v_max);

// Keeps the combinations consistent with both structural facts:
// (v5=0 or f5=0 or n335>0) and (n335 != 1 or n345>0 or n355>0).
std::vector<DegreeCombination> filter_combinations(
    const std::vector<DegreeCombination>& in);

}  // namespace curv
