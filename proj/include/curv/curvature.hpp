#pragma once

#include <vector>

#include "curv/map.hpp"
#include "curv/rational.hpp"
#include "curv/tessellation.hpp"

namespace curv {

// Sorted face degrees around a vertex, one entry per corner incidence (a face
// meeting the vertex twice contributes twice).
std::vector<int> vertex_pattern(const EmbeddedMap& m, int v);

// Sorted vertex degrees around a face, one entry per corner incidence.
std::vector<int> face_pattern(const EmbeddedMap& m, int f);

// Phi(x) = 1 - |x|/2 + sum over corners at x of 1/|face|.
Rational combinatorial_curvature(const EmbeddedMap& m, int v);

// C(x, sigma) = 1/|x| + 1/|sigma| - 1/2. Throws if (v, f) is not incident.
Rational corner_curvature(const EmbeddedMap& m, int v, int f);

// Forman curvature of an edge straight from the definition: incident faces
// and vertices counted as sets, minus the parallel neighbors (edges sharing
// exactly one of: a vertex, a face). Works on any map, tessellation or not.
int forman_definitional(const EmbeddedMap& m, int e);

// Tessellation formula 16 - (|x1|+|x2|+|f1|+|f2|). Only meaningful on maps
// passing tessellation validation; callers gate on that.
int forman_formula(const EmbeddedMap& m, int e);

// Psi(e) = 1/|x1| + 1/|x2| + 1/|f1| + 1/|f2| - 1, corner multiplicities as in
// the medial graph. Equals the combinatorial curvature of the medial vertex
// of e.
Rational edge_mean_curvature(const EmbeddedMap& m, int e);

// Sum of Phi over all vertices; the Euler characteristic for tessellations.
Rational gauss_bonnet_total(const EmbeddedMap& m);

struct CurvatureReport {
  std::vector<Rational> vertex_phi;
  std::vector<int> edge_forman;           // definitional route
  std::vector<Rational> edge_psi;
  std::vector<Rational> corner_values;    // one per dart (corner at its source)
  Rational total_phi;
  Rational min_phi;
  int min_forman = 0;
  Rational min_corner;
  Rational min_psi;
  TessellationReport tessellation;
};

CurvatureReport curvature_report(const EmbeddedMap& m);

}  // namespace curv
