#include "curv/codec.hpp"

#include <cctype>
#include <cstring>
#include <sstream>
#include <stdexcept>

namespace curv {

namespace {

std::string vertex_name(int v) {
  if (v < 26) return std::string(1, static_cast<char>('a' + v));
  return "v" + std::to_string(v);
}

}  // namespace

Bytes encode_planar_code(const std::vector<EmbeddedMap>& maps) {
  Bytes out(kPlanarCodeHeader, kPlanarCodeHeader + 15);
  for (const auto& m : maps) {
    if (m.vertex_count() > 255)
      throw std::invalid_argument("planar_code supports at most 255 vertices");
    out.push_back(static_cast<std::uint8_t>(m.vertex_count()));
    for (int v = 0; v < m.vertex_count(); ++v) {
      for (Dart d : m.vertex_darts(v))
        out.push_back(static_cast<std::uint8_t>(m.head_of(d) + 1));
      out.push_back(0);
    }
  }
  return out;
}

std::vector<EmbeddedMap> decode_planar_code(const Bytes& data) {
  if (data.size() < 15 || std::memcmp(data.data(), kPlanarCodeHeader, 15) != 0)
    throw std::invalid_argument("malformed planar_code header");
  std::vector<EmbeddedMap> out;
  std::size_t pos = 15;
  while (pos < data.size()) {
    const int n = data[pos++];
    if (n == 0) throw std::invalid_argument("planar_code: zero vertex count");
    std::vector<std::vector<int>> rot(n);
    for (int v = 0; v < n; ++v) {
      while (true) {
        if (pos >= data.size())
          throw std::invalid_argument("planar_code: truncated record");
        const int b = data[pos++];
        if (b == 0) break;
        if (b > n)
          throw std::invalid_argument("planar_code: vertex index out of range");
        rot[v].push_back(b - 1);
      }
    }
    out.push_back(build_map(rot));
  }
  return out;
}

std::string encode_ascii_adjacency(const EmbeddedMap& m) {
  std::string out;
  for (int v = 0; v < m.vertex_count(); ++v) {
    if (v) out += ",";
    out += vertex_name(v) + ":";
    for (Dart d : m.vertex_darts(v)) out += vertex_name(m.head_of(d));
  }
  return out;
}

EmbeddedMap decode_ascii_adjacency(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("empty adjacency text");

  std::vector<std::vector<int>> rot;
  std::size_t pos = 0;
  int expected = 0;
  while (pos < s.size()) {
    std::size_t comma = s.find(',', pos);
    std::string entry = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    pos = comma == std::string::npos ? s.size() : comma + 1;
    std::size_t colon = entry.find(':');
    if (colon != 1 || entry.size() < 2)
      throw std::invalid_argument("adjacency entry must look like \"a:bcd\"");
    const int v = entry[0] - 'a';
    if (v != expected++)
      throw std::invalid_argument("adjacency entries must be a,b,c,... in order");
    std::vector<int> nbrs;
    for (std::size_t i = colon + 1; i < entry.size(); ++i) {
      const int w = entry[i] - 'a';
      if (w < 0 || w >= 26)
        throw std::invalid_argument("vertex names must be lowercase letters");
      nbrs.push_back(w);
    }
    rot.push_back(std::move(nbrs));
  }
  return build_map(rot);
}

std::string encode_dot(const EmbeddedMap& m) {
  std::ostringstream os;
  os << "graph G {\n";
  for (int e = 0; e < m.edge_count(); ++e) {
    auto [d, dd] = m.edge_darts(e);
    os << "  " << vertex_name(m.vertex_of(d)) << " -- "
       << vertex_name(m.vertex_of(dd)) << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::vector<EmbeddedMap> decode_auto(const Bytes& data) {
  if (data.size() >= 15 && std::memcmp(data.data(), kPlanarCodeHeader, 15) == 0)
    return decode_planar_code(data);
  std::string text(data.begin(), data.end());
  return {decode_ascii_adjacency(text)};
}

}  // namespace curv
