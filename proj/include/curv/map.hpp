#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace curv {

using Dart = int;
using Bytes = std::vector<std::uint8_t>;

// A graph cellularly embedded in an orientable surface, encoded as a rotation
// system: darts 0..2E-1, sigma = next dart counter-clockwise around the dart's
// source vertex, alpha = the dart's reversal (fixed-point-free involution).
// Vertices are sigma-orbits, edges alpha-orbits, face walks orbits of
// phi = sigma∘alpha. Immutable after construction; all derived incidence data
// is computed eagerly (every map in scope is tiny).
class EmbeddedMap {
 public:
  // Validates: permutation/involution structure and connectedness.
  EmbeddedMap(std::vector<int> sigma, std::vector<int> alpha);

  int dart_count() const { return static_cast<int>(sigma_.size()); }
  int vertex_count() const { return static_cast<int>(rotations_.size()); }
  int edge_count() const { return dart_count() / 2; }
  int face_count() const { return static_cast<int>(face_walks_.size()); }
  int euler_characteristic() const {
    return vertex_count() - edge_count() + face_count();
  }

  Dart sigma(Dart d) const { return sigma_[d]; }
  Dart sigma_inv(Dart d) const { return sigma_inv_[d]; }
  Dart alpha(Dart d) const { return alpha_[d]; }
  Dart phi(Dart d) const { return sigma_[alpha_[d]]; }

  int vertex_of(Dart d) const { return vertex_of_[d]; }
  int edge_of(Dart d) const { return edge_of_[d]; }
  int face_of(Dart d) const { return face_of_[d]; }
  // Target vertex of a dart (source of its reversal).
  int head_of(Dart d) const { return vertex_of_[alpha_[d]]; }

  int degree(int v) const { return static_cast<int>(rotations_[v].size()); }
  // Face degree counts edges along the walk, with multiplicity.
  int face_degree(int f) const {
    return static_cast<int>(face_walks_[f].size());
  }

  // Darts at v in rotation order, starting from the smallest dart id.
  const std::vector<Dart>& vertex_darts(int v) const { return rotations_[v]; }
  // Face boundary walks as phi-orbits, one per face.
  const std::vector<std::vector<Dart>>& face_walks() const {
    return face_walks_;
  }
  // The two darts of edge e, smaller first.
  std::pair<Dart, Dart> edge_darts(int e) const { return edge_darts_[e]; }

  // True when the underlying graph has no loops and no parallel edges.
  bool is_simple() const;

  // Neighbor vertex ids in rotation order, one list per vertex.
  std::vector<std::vector<int>> rotation_lists() const;

  const std::vector<int>& sigma_perm() const { return sigma_; }
  const std::vector<int>& sigma_inv_perm() const { return sigma_inv_; }
  const std::vector<int>& alpha_perm() const { return alpha_; }

 private:
  std::vector<int> sigma_, sigma_inv_, alpha_;
  std::vector<int> vertex_of_, edge_of_, face_of_;
  std::vector<std::vector<Dart>> rotations_;
  std::vector<std::vector<Dart>> face_walks_;
  std::vector<std::pair<Dart, Dart>> edge_darts_;
};

// Builds a map from per-vertex counter-clockwise neighbor lists. Rejects
// asymmetric adjacency, loops, repeated neighbors and disconnected input;
// multigraphs can only be built through the raw (sigma, alpha) constructor.
EmbeddedMap build_map(const std::vector<std::vector<int>>& rotations);

enum class IsoMode { OP, OP_OR };

// Byte string equal for two maps iff they are isomorphic in the given mode
// (orientation-preserving only, or up to mirror image as well). Invariant
// under dart relabeling.
struct CanonicalCode {
  IsoMode mode;
  Bytes bytes;

  bool operator==(const CanonicalCode& o) const {
    return mode == o.mode && bytes == o.bytes;
  }
  bool operator<(const CanonicalCode& o) const { return bytes < o.bytes; }
};

CanonicalCode canonical_code(const EmbeddedMap& m, IsoMode mode);

enum class IsoClass { None, OP, OROnly };

// OP when an orientation-preserving isomorphism exists, OROnly when only an
// orientation-reversing one does, None otherwise.
IsoClass are_isomorphic(const EmbeddedMap& a, const EmbeddedMap& b);

struct MapAutomorphism {
  std::vector<int> dart_perm;
  bool orientation_reversing = false;
};

// Complete automorphism list, both orientation classes, identity included.
std::vector<MapAutomorphism> automorphism_group(const EmbeddedMap& m);

// Vertex connectivity of the underlying simple graph, capped at 4.
int connectivity(const EmbeddedMap& m);

namespace wordgen {

// Lexicographically minimal BFS word of the dart structure (next, alpha) over
// the given root darts; with include_mirror the traversal is repeated with
// sigma reversed. Used both for whole-map canonical codes and for canonical
// keys of bordered intermediates in the generators. Requires dart counts and
// labels to fit a byte.
Bytes min_word(const std::vector<int>& sigma, const std::vector<int>& sigma_inv,
               const std::vector<int>& alpha, const std::vector<int>& roots,
               bool include_mirror);

}  // namespace wordgen

}  // namespace curv
