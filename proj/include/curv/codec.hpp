#pragma once

#include <string>
#include <vector>

#include "curv/map.hpp"

namespace curv {

// plantri-style binary stream: 15-byte ASCII header ">>planar_code<<", then
// per graph one byte n followed by each vertex's neighbors (1-based) in
// rotation order, each list 0-terminated. Internal indices are 0-based; the
// 1-based convention is confined to this codec.
inline constexpr char kPlanarCodeHeader[] = ">>planar_code<<";

Bytes encode_planar_code(const std::vector<EmbeddedMap>& maps);
std::vector<EmbeddedMap> decode_planar_code(const Bytes& data);

// Comma-separated "v:neighbors" entries with vertices named a,b,c,...;
// whitespace ignored. Round-trips exactly on its own output.
std::string encode_ascii_adjacency(const EmbeddedMap& m);
EmbeddedMap decode_ascii_adjacency(const std::string& text);

// Graphviz export, output only.
std::string encode_dot(const EmbeddedMap& m);

// Sniffs planar_code vs ascii adjacency and decodes.
std::vector<EmbeddedMap> decode_auto(const Bytes& data);

}  // namespace curv
