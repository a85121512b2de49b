#pragma once

#include <vector>

#include "curv/map.hpp"
#include "curv/rational.hpp"
#include "curv/tessellation.hpp"

namespace curv {

enum class Positivity { forman, corner };

// All orientation-reversing involutive automorphisms fixing no vertex, no
// edge and no face: the deck transformations of sphere-to-projective-plane
// double covers. (Orientation-preserving fixed-point-free involutions do not
// arise as deck maps of that cover and are ignored.)
std::vector<MapAutomorphism> antipodal_involutions(const EmbeddedMap& m);

// A projective-plane map represented through its orientation double cover: a
// sphere map plus the deck involution. Never materialized as a signed
// rotation system; all queries go through the (cover, deck) pair.
struct QuotientMap {
  EmbeddedMap cover;
  MapAutomorphism deck;

  // Derived incidence: orbit ids are 0-based and dense.
  std::vector<int> vertex_orbit;  // per cover vertex
  std::vector<int> edge_orbit;    // per cover edge
  std::vector<int> face_orbit;    // per cover face
  int vertex_count = 0, edge_count = 0, face_count = 0;
  // One representative cover face per orbit, and its walk projected to
  // (vertex orbit, edge orbit) pairs.
  std::vector<int> face_rep;
  std::vector<std::vector<std::pair<int, int>>> face_walks;

  int euler_characteristic() const {
    return vertex_count - edge_count + face_count;
  }
};

// Validates that the involution qualifies and builds the quotient incidence.
QuotientMap quotient(const EmbeddedMap& m, const MapAutomorphism& deck);

// Tessellation axioms evaluated on the quotient incidence structure.
TessellationReport quotient_is_tessellation(const QuotientMap& q);

// Sum of the combinatorial curvature over quotient vertices (values are
// deck-invariant, so any lift represents its orbit).
Rational quotient_gauss_bonnet(const QuotientMap& q);

// Canonical form of the (cover, deck) pair; quotients are isomorphic iff
// their pairs are, the orientation double cover being unique.
Bytes quotient_canonical_code(const QuotientMap& q);

// Scans a complete sphere catalog for members whose projection to the
// projective plane is a tessellation; deduplicated, code-sorted.
std::vector<QuotientMap> classify_rp2(const std::vector<EmbeddedMap>& sphere_catalog,
                                      Positivity positivity);

}  // namespace curv
