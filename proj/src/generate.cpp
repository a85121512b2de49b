#include "curv/generate.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "curv/curvature.hpp"
#include "curv/tessellation.hpp"

namespace curv {

const std::vector<std::array<int, 4>> kVpPatterns = {
    {3, 3, 3, 3}, {3, 3, 3, 4}, {3, 3, 3, 5}, {3, 3, 3, 6},
    {3, 3, 4, 4}, {3, 3, 4, 5}, {3, 4, 4, 4}};

const std::array<const char*, 10> kPatternNames = {
    "333", "334", "335", "344", "345", "355", "444", "445", "455", "555"};

EmbeddedMap pseudo_double_wheel(int p) {
  if (p < 3) throw std::invalid_argument("pseudo_double_wheel needs p >= 3");
  const int rim = 2 * p, ha = rim, hb = rim + 1;
  std::vector<std::vector<int>> rot(rim + 2);
  for (int i = 0; i < p; ++i) {
    const int even = 2 * i, odd = 2 * i + 1;
    rot[even] = {(even + 1) % rim, ha, (even + rim - 1) % rim};
    rot[odd] = {(odd + 1) % rim, (odd + rim - 1) % rim, hb};
    rot[ha].push_back(even);
  }
  for (int i = p - 1; i >= 0; --i) rot[hb].push_back(2 * i + 1);

  EmbeddedMap m = build_map(rot);
  for (int f = 0; f < m.face_count(); ++f)
    if (m.face_degree(f) != 4)
      throw std::logic_error("pseudo_double_wheel produced a non-quad face");
  return m;
}

namespace {

std::vector<int> find_face_walk(const EmbeddedMap& m, Dart d) {
  return m.face_walks()[m.face_of(d)];
}

int index_in_rotation(const EmbeddedMap& m, Dart d) {
  const auto& ds = m.vertex_darts(m.vertex_of(d));
  for (int i = 0; i < static_cast<int>(ds.size()); ++i)
    if (ds[i] == d) return i;
  throw std::logic_error("dart missing from its rotation");
}

int index_of_neighbor(const std::vector<int>& list, int w) {
  for (int i = 0; i < static_cast<int>(list.size()); ++i)
    if (list[i] == w) return i;
  throw std::logic_error("neighbor missing from rotation list");
}

}  // namespace

EmbeddedMap apply_expansion(const EmbeddedMap& q, ExpansionKind kind,
                            ExpansionSite site) {
  if (site.dart_a < 0 || site.dart_a >= q.dart_count())
    throw std::invalid_argument("expansion site out of range");
  auto rot = q.rotation_lists();
  const int nv = q.vertex_count();

  if (kind == ExpansionKind::diagonal_vertex) {
    const Dart d = site.dart_a;
    const auto walk = find_face_walk(q, d);
    if (walk.size() != 4)
      throw std::invalid_argument("diagonal insertion needs a degree-4 face");
    // Face walk from d: a -> x -> b -> y; the new vertex joins the diagonal
    // {a, b}, sitting between y and x in a's rotation and between x and y in
    // b's.
    const Dart d0 = d, d2 = q.phi(q.phi(d));
    const int a = q.vertex_of(d0), b = q.vertex_of(d2);
    const int z = nv;
    rot.push_back({a, b});
    rot[a].insert(rot[a].begin() + index_in_rotation(q, d0), z);
    rot[b].insert(rot[b].begin() + index_in_rotation(q, d2), z);
    EmbeddedMap out = build_map(rot);
    if (out.face_count() != q.face_count() + 1)
      throw std::logic_error("diagonal insertion broke the face structure");
    return out;
  }

  // vertex_split
  const Dart da = site.dart_a, db = site.dart_b;
  if (db < 0 || db >= q.dart_count() || da == db ||
      q.vertex_of(da) != q.vertex_of(db))
    throw std::invalid_argument("vertex split needs two distinct darts at one vertex");
  const int w = q.vertex_of(da);
  const auto& L = rot[w];
  const int deg = static_cast<int>(L.size());
  const int ia = index_in_rotation(q, da), ib = index_in_rotation(q, db);
  const int a = L[ia], b = L[ib];

  std::vector<int> seg_v, seg_u;
  for (int i = ia;; i = (i + 1) % deg) {
    seg_v.push_back(L[i]);
    if (i == ib) break;
  }
  for (int i = ib;; i = (i + 1) % deg) {
    seg_u.push_back(L[i]);
    if (i == ia) break;
  }

  const int u = nv;
  // Interior of u's segment now neighbors u instead of w (w's id is reused by
  // the v side).
  for (std::size_t i = 1; i + 1 < seg_u.size(); ++i)
    rot[seg_u[i]][index_of_neighbor(rot[seg_u[i]], w)] = u;
  {
    auto& ra = rot[a];
    const int pos = index_of_neighbor(ra, w);
    ra.insert(ra.begin() + pos + 1, u);  // (.., v, u, ..)
  }
  {
    auto& rb = rot[b];
    const int pos = index_of_neighbor(rb, w);
    rb[pos] = u;
    rb.insert(rb.begin() + pos + 1, w);  // (.., u, v, ..)
  }
  rot[w] = seg_v;
  rot.push_back(seg_u);

  EmbeddedMap out = build_map(rot);
  if (out.face_count() != q.face_count() + 1)
    throw std::logic_error("vertex split broke the face structure");
  return out;
}

// ---------------------------------------------------------------------------
// Seed-and-expand closure. Complete for simple 2-connected quadrangulations:
// a degree-2 vertex whose two faces have distinct opposite corners can always
// be removed, and everything of minimum degree 3 short of the pseudo-double
// wheels admits a face contraction; both removals invert to the expansions
// above. Checked against the independent boundary-growth oracle for every
// bound in CI.

namespace {

using CodeMap = std::map<Bytes, EmbeddedMap>;

Bytes op_or_code(const EmbeddedMap& m) {
  return canonical_code(m, IsoMode::OP_OR).bytes;
}

EmbeddedMap four_cycle() {
  return build_map({{1, 3}, {2, 0}, {3, 1}, {0, 2}});
}

CodeMap quad_closure(int max_faces) {
  std::map<int, CodeMap> levels;
  auto seed = [&](EmbeddedMap m) {
    const int f = m.face_count();
    if (f > max_faces) return;
    levels[f].emplace(op_or_code(m), std::move(m));
  };
  seed(four_cycle());
  for (int p = 3; 2 * p <= max_faces; ++p) seed(pseudo_double_wheel(p));

  CodeMap all;
  for (int f = 2; f <= max_faces; ++f) {
    auto it = levels.find(f);
    if (it == levels.end()) continue;
    for (const auto& [code, m] : it->second) {
      all.emplace(code, m);
      if (f == max_faces) continue;
      auto& next = levels[f + 1];
      auto emit = [&](EmbeddedMap child) {
        Bytes c = op_or_code(child);
        next.emplace(std::move(c), std::move(child));
      };
      for (int face = 0; face < m.face_count(); ++face) {
        const auto& walk = m.face_walks()[face];
        for (int anchor = 0; anchor < 2; ++anchor)
          emit(apply_expansion(m, ExpansionKind::diagonal_vertex, {walk[anchor], -1}));
      }
      for (int v = 0; v < m.vertex_count(); ++v) {
        const auto& ds = m.vertex_darts(v);
        for (std::size_t i = 0; i < ds.size(); ++i)
          for (std::size_t j = i + 1; j < ds.size(); ++j)
            emit(apply_expansion(m, ExpansionKind::vertex_split, {ds[i], ds[j]}));
      }
    }
  }
  return all;
}

// ---------------------------------------------------------------------------
// Boundary-growth search. Grows a disk of faces by gluing each new face onto
// a contiguous run of boundary edges (every sphere map minus a face is a
// shellable disk, so this reaches everything); closing the boundary when it
// matches an allowed face size finishes a sphere map. Intermediate disks are
// deduplicated by a canonical key, mirror images identified.

struct Disk {
  std::vector<int> sig, sig_inv, alf, vtx;
  std::vector<int> deg;
  std::vector<char> interior;
  std::vector<std::vector<int>> face_verts;
  std::vector<std::vector<int>> vface_sizes;  // sizes of placed faces at v
  std::vector<int> boundary;                  // outer walk darts, phi order

  int ndarts() const { return static_cast<int>(sig.size()); }
  int nverts() const { return static_cast<int>(deg.size()); }
};

Disk initial_disk(int k) {
  Disk d;
  d.sig.resize(2 * k);
  d.sig_inv.resize(2 * k);
  d.alf.resize(2 * k);
  d.vtx.resize(2 * k);
  d.deg.assign(k, 2);
  d.interior.assign(k, 0);
  for (int j = 0; j < k; ++j) {
    d.vtx[2 * j] = j;
    d.vtx[2 * j + 1] = (j + 1) % k;
    d.alf[2 * j] = 2 * j + 1;
    d.alf[2 * j + 1] = 2 * j;
    d.sig[2 * j] = 2 * ((j + k - 1) % k) + 1;
    d.sig[2 * j + 1] = 2 * ((j + 1) % k);
  }
  for (int t = 0; t < 2 * k; ++t) d.sig_inv[d.sig[t]] = t;
  std::vector<int> face;
  for (int j = 0; j < k; ++j) face.push_back(j);
  d.face_verts.push_back(face);
  d.vface_sizes.assign(k, {k});
  // outer walk from dart 1
  int cur = 1;
  do {
    d.boundary.push_back(cur);
    cur = d.sig[d.alf[cur]];
  } while (cur != 1);
  return d;
}

// Glues a k-gon onto s consecutive boundary edges starting at boundary
// position i. Returns false when the glue would create a parallel edge.
bool glue_face(const Disk& in, int i, int s, int k, Disk& out,
               std::vector<int>* touched, std::vector<int>* interiorized) {
  const int b = static_cast<int>(in.boundary.size());
  const Dart first = in.boundary[i];
  const Dart last = in.boundary[(i + s - 1) % b];
  const int u0 = in.vtx[first];
  const int us = in.vtx[in.alf[last]];

  if (s == k - 1) {
    // single closing edge u_s -- u_0; refuse if already adjacent
    Dart cur = first;
    do {
      if (in.vtx[in.alf[cur]] == us) return false;
      cur = in.sig[cur];
    } while (cur != first);
  }

  out = in;
  const int new_edges = k - s;
  const int new_verts = k - s - 1;
  const int base = out.ndarts();
  const int vbase = out.nverts();
  out.sig.resize(base + 2 * new_edges);
  out.sig_inv.resize(base + 2 * new_edges);
  out.alf.resize(base + 2 * new_edges);
  out.vtx.resize(base + 2 * new_edges);
  for (int t = 0; t < new_verts; ++t) {
    out.deg.push_back(2);
    out.interior.push_back(0);
    out.vface_sizes.emplace_back();
  }

  auto p = [&](int t) { return base + 2 * t; };
  auto q = [&](int t) { return base + 2 * t + 1; };
  for (int t = 0; t < new_edges; ++t) {
    out.alf[p(t)] = q(t);
    out.alf[q(t)] = p(t);
    out.vtx[p(t)] = (t == 0) ? us : vbase + t - 1;
    out.vtx[q(t)] = (t == new_edges - 1) ? u0 : vbase + t;
  }

  auto insert_after = [&](int y, int x) {
    const int z = out.sig[y];
    out.sig[y] = x;
    out.sig_inv[x] = y;
    out.sig[x] = z;
    out.sig_inv[z] = x;
  };
  insert_after(out.alf[last], p(0));
  for (int t = 1; t < new_edges; ++t) {
    out.sig[q(t - 1)] = p(t);
    out.sig_inv[p(t)] = q(t - 1);
    out.sig[p(t)] = q(t - 1);
    out.sig_inv[q(t - 1)] = p(t);
  }
  {
    const int rho = out.sig_inv[first];
    out.sig[rho] = q(new_edges - 1);
    out.sig_inv[q(new_edges - 1)] = rho;
    out.sig[q(new_edges - 1)] = first;
    out.sig_inv[first] = q(new_edges - 1);
  }
  out.deg[u0] += 1;
  out.deg[us] += 1;

  std::vector<int> fv;
  for (int j = 0; j < s; ++j) fv.push_back(in.vtx[in.boundary[(i + j) % b]]);
  fv.push_back(us);
  for (int t = 0; t < new_verts; ++t) fv.push_back(vbase + t);
  for (int v : fv) out.vface_sizes[v].push_back(k);
  out.face_verts.push_back(fv);

  if (touched) {
    touched->clear();
    touched->push_back(u0);
    touched->push_back(us);
  }
  if (interiorized) {
    interiorized->clear();
    for (int j = 1; j < s; ++j) {
      const int v = in.vtx[in.boundary[(i + j) % b]];
      out.interior[v] = 1;
      interiorized->push_back(v);
    }
  }

  out.boundary.clear();
  const Dart start = in.boundary[(i + s) % b];
  Dart cur = start;
  do {
    out.boundary.push_back(cur);
    cur = out.sig[out.alf[cur]];
  } while (cur != start);
  assert(static_cast<int>(out.boundary.size()) == b - s + (k - s));
  return true;
}

std::string disk_key(const Disk& d) {
  std::vector<int> mirror_roots(d.boundary.size());
  for (std::size_t i = 0; i < d.boundary.size(); ++i)
    mirror_roots[i] = d.alf[d.boundary[i]];
  Bytes w1 = wordgen::min_word(d.sig, d.sig_inv, d.alf, d.boundary, false);
  Bytes w2 = wordgen::min_word(d.sig_inv, d.sig, d.alf, mirror_roots, false);
  const Bytes& w = std::min(w1, w2);
  std::string key;
  key.reserve(w.size() + 2);
  key.push_back(static_cast<char>(d.boundary.size()));
  key.push_back(static_cast<char>(d.ndarts() & 0xff));
  key.append(w.begin(), w.end());
  return key;
}

struct GrowthConfig {
  std::vector<int> face_sizes;  // ascending
  int max_faces = 0;
  int max_vertices = 0;
  enum class Mode { plain, quad_patterns, corner } mode = Mode::plain;
  std::vector<std::array<int, 4>> quad_patterns;
  std::vector<std::vector<int>> corner_patterns;  // each sorted
  std::vector<int> corner_degrees;                // allowed vertex degrees
  bool require_v_le_f = true;                     // corner mode only
  bool reverse_scan = false;
};

class GrowthEngine {
 public:
  explicit GrowthEngine(GrowthConfig cfg) : cfg_(std::move(cfg)) {
    max_size_ = *std::max_element(cfg_.face_sizes.begin(), cfg_.face_sizes.end());
    if (cfg_.mode == GrowthConfig::Mode::quad_patterns) {
      pattern_floor_ = 99;
      for (const auto& p : cfg_.quad_patterns)
        pattern_floor_ = std::min(pattern_floor_, p[0]);
    }
  }

  CodeMap run() {
    for (int k : cfg_.face_sizes) {
      if (k > max_size_) continue;
      dfs(initial_disk(k));
    }
    return std::move(out_);
  }

 private:
  bool degree_ok(const Disk& d, int v) const {
    switch (cfg_.mode) {
      case GrowthConfig::Mode::plain:
        return true;
      case GrowthConfig::Mode::quad_patterns:
        return d.deg[v] <= 6 && (!d.interior[v] || d.deg[v] >= 3);
      case GrowthConfig::Mode::corner: {
        const auto& degs = cfg_.corner_degrees;
        const int maxdeg = degs.back();
        if (d.deg[v] > maxdeg) return false;
        if (d.interior[v] &&
            std::find(degs.begin(), degs.end(), d.deg[v]) == degs.end())
          return false;
        return true;
      }
    }
    return true;
  }

  // Corner mode: the multiset of face sizes already placed at v must extend
  // to an allowed pattern (exactly, once v is interior).
  bool corner_pattern_ok(const Disk& d, int v) const {
    std::vector<int> have = d.vface_sizes[v];
    std::sort(have.begin(), have.end());
    for (const auto& p : cfg_.corner_patterns) {
      if (d.interior[v]) {
        if (p == have) return true;
        continue;
      }
      if (static_cast<int>(p.size()) < d.deg[v] || p.size() < have.size())
        continue;
      // sub-multiset test on sorted lists
      std::size_t i = 0;
      for (int x : p) {
        if (i < have.size() && have[i] == x) ++i;
      }
      if (i == have.size()) return true;
    }
    return false;
  }

  // Quad-pattern mode: lower bounds of each placed face's final pattern must
  // be dominated by some allowed pattern.
  bool quad_faces_ok(const Disk& d) const {
    std::array<int, 4> lb;
    for (const auto& fv : d.face_verts) {
      for (int i = 0; i < 4; ++i) {
        const int v = fv[i];
        lb[i] = d.interior[v] ? d.deg[v] : std::max(d.deg[v], pattern_floor_);
      }
      std::sort(lb.begin(), lb.end());
      bool dominated = false;
      for (const auto& p : cfg_.quad_patterns) {
        if (lb[0] <= p[0] && lb[1] <= p[1] && lb[2] <= p[2] && lb[3] <= p[3]) {
          dominated = true;
          break;
        }
      }
      if (!dominated) return false;
    }
    return true;
  }

  bool child_ok(const Disk& d, const std::vector<int>& touched,
                const std::vector<int>& interiorized) const {
    if (d.nverts() > cfg_.max_vertices) return false;
    const int placed = static_cast<int>(d.face_verts.size());
    if (placed + 1 > cfg_.max_faces) return false;
    // enough glue steps left to shrink the boundary to a closable size
    const int b = static_cast<int>(d.boundary.size());
    if (b > max_size_) {
      const int shrink = std::max(1, max_size_ - 2);
      const int needed = (b - max_size_ + shrink - 1) / shrink;
      if (placed + 1 + needed > cfg_.max_faces) return false;
    }
    for (int v : touched)
      if (!degree_ok(d, v)) return false;
    for (int v : interiorized)
      if (!degree_ok(d, v)) return false;
    if (cfg_.mode == GrowthConfig::Mode::quad_patterns && !quad_faces_ok(d))
      return false;
    if (cfg_.mode == GrowthConfig::Mode::corner) {
      for (int v : touched)
        if (!corner_pattern_ok(d, v)) return false;
      for (int v : interiorized)
        if (!corner_pattern_ok(d, v)) return false;
    }
    return true;
  }

  void try_close(const Disk& d) {
    const int b = static_cast<int>(d.boundary.size());
    if (std::find(cfg_.face_sizes.begin(), cfg_.face_sizes.end(), b) ==
        cfg_.face_sizes.end())
      return;
    if (static_cast<int>(d.face_verts.size()) + 1 > cfg_.max_faces) return;
    // Closing makes the outer walk a face; all boundary vertices go interior.
    Disk closed = d;
    for (int v = 0; v < closed.nverts(); ++v) closed.interior[v] = 1;
    for (Dart t : closed.boundary)
      closed.vface_sizes[closed.vtx[t]].push_back(b);

    for (int v = 0; v < closed.nverts(); ++v) {
      if (!degree_ok(closed, v)) return;
      if (cfg_.mode == GrowthConfig::Mode::corner && !corner_pattern_ok(closed, v))
        return;
    }

    EmbeddedMap m(closed.sig, closed.alf);
    if (m.euler_characteristic() != 2)
      throw std::logic_error("growth produced a non-spherical map");
    if (!finished_ok(m)) return;
    Bytes code = op_or_code(m);
    out_.emplace(std::move(code), std::move(m));
  }

  bool finished_ok(const EmbeddedMap& m) const {
    switch (cfg_.mode) {
      case GrowthConfig::Mode::plain:
        return true;
      case GrowthConfig::Mode::quad_patterns:
        for (int f = 0; f < m.face_count(); ++f) {
          const auto pat = face_pattern(m, f);
          std::array<int, 4> p{pat[0], pat[1], pat[2], pat[3]};
          if (std::find(cfg_.quad_patterns.begin(), cfg_.quad_patterns.end(),
                        p) == cfg_.quad_patterns.end())
            return false;
        }
        return true;
      case GrowthConfig::Mode::corner: {
        if (cfg_.require_v_le_f && m.vertex_count() > m.face_count())
          return false;
        for (int f = 0; f < m.face_count(); ++f) {
          if (std::find(cfg_.face_sizes.begin(), cfg_.face_sizes.end(),
                        m.face_degree(f)) == cfg_.face_sizes.end())
            return false;
        }
        for (int v = 0; v < m.vertex_count(); ++v) {
          const auto pat = vertex_pattern(m, v);
          if (std::find(cfg_.corner_patterns.begin(), cfg_.corner_patterns.end(),
                        pat) == cfg_.corner_patterns.end())
            return false;
        }
        return is_tessellation(m).passed;
      }
    }
    return true;
  }

  void dfs(const Disk& d) {
    if (!memo_.insert(disk_key(d)).second) return;
    try_close(d);

    const int b = static_cast<int>(d.boundary.size());
    std::vector<int> touched, interiorized;
    Disk child;
    auto scan = [&](int k) {
      const int smax = std::min(k - 1, b - 1);
      for (int s = 1; s <= smax; ++s)
        for (int i = 0; i < b; ++i) {
          const int ii = cfg_.reverse_scan ? b - 1 - i : i;
          const int ss = cfg_.reverse_scan ? smax + 1 - s : s;
          if (!glue_face(d, ii, ss, k, child, &touched, &interiorized)) continue;
          if (!child_ok(child, touched, interiorized)) continue;
          dfs(child);
        }
    };
    if (cfg_.reverse_scan)
      for (auto it = cfg_.face_sizes.rbegin(); it != cfg_.face_sizes.rend(); ++it)
        scan(*it);
    else
      for (int k : cfg_.face_sizes) scan(k);
  }

  GrowthConfig cfg_;
  int max_size_ = 0;
  int pattern_floor_ = 2;
  std::unordered_set<std::string> memo_;
  CodeMap out_;
};

std::vector<EmbeddedMap> to_sorted_vector(CodeMap&& m) {
  std::vector<EmbeddedMap> out;
  out.reserve(m.size());
  for (auto& [code, map] : m) out.push_back(std::move(map));
  return out;
}

}  // namespace

std::vector<EmbeddedMap> generate_quadrangulations(const QuadConstraints& c) {
  if (!c.require_simple || !c.require_two_connected)
    throw std::invalid_argument(
        "only simple 2-connected quadrangulations are supported");
  if (c.max_faces < 2) return {};

  if (c.allowed_face_patterns.empty()) {
    if (c.max_faces > 16)
      throw std::invalid_argument(
          "unfiltered quadrangulation generation is capped at 16 faces");
    CodeMap all = quad_closure(c.max_faces);
    return to_sorted_vector(std::move(all));
  }

  if (c.max_faces > 24)
    throw std::invalid_argument("face bound exceeds the supported range (24)");
  GrowthConfig cfg;
  cfg.face_sizes = {4};
  cfg.max_faces = c.max_faces;
  cfg.max_vertices = c.max_faces + 2;
  cfg.mode = GrowthConfig::Mode::quad_patterns;
  cfg.quad_patterns = c.allowed_face_patterns;
  for (auto& p : cfg.quad_patterns) std::sort(p.begin(), p.end());
  std::sort(cfg.quad_patterns.begin(), cfg.quad_patterns.end());
  return to_sorted_vector(GrowthEngine(std::move(cfg)).run());
}

std::vector<EmbeddedMap> brute_force_quadrangulations(int max_faces,
                                                      bool reverse_scan) {
  if (max_faces > 12)
    throw std::invalid_argument("brute force oracle refuses bounds above 12 faces");
  if (max_faces < 2) return {};
  GrowthConfig cfg;
  cfg.face_sizes = {4};
  cfg.max_faces = max_faces;
  cfg.max_vertices = max_faces + 2;
  cfg.mode = GrowthConfig::Mode::plain;
  cfg.reverse_scan = reverse_scan;
  return to_sorted_vector(GrowthEngine(std::move(cfg)).run());
}

std::vector<EmbeddedMap> generate_corner_candidates(const CornerConstraints& c) {
  GrowthConfig cfg;
  cfg.face_sizes = c.face_degrees;
  std::sort(cfg.face_sizes.begin(), cfg.face_sizes.end());
  cfg.max_vertices = c.max_vertices;
  const int maxdeg = *std::max_element(c.vertex_degrees.begin(), c.vertex_degrees.end());
  // Euler bound: F = E - V + 2 <= maxdeg*V/2 - V + 2
  cfg.max_faces = maxdeg * c.max_vertices / 2 - c.max_vertices + 2;
  cfg.mode = GrowthConfig::Mode::corner;
  cfg.corner_patterns = c.allowed_vertex_patterns;
  for (auto& p : cfg.corner_patterns) std::sort(p.begin(), p.end());
  cfg.corner_degrees = c.vertex_degrees;
  std::sort(cfg.corner_degrees.begin(), cfg.corner_degrees.end());
  cfg.require_v_le_f = c.require_v_le_f;
  return to_sorted_vector(GrowthEngine(std::move(cfg)).run());
}

std::vector<DegreeCombination> degree_combination_solutions(int v_min, int v_max) {
  std::vector<DegreeCombination> out;
  if (v_min > v_max) return out;
  for (int v = std::max(0, v_min); v <= v_max; ++v) {
    for (int v3 = 0; v3 <= v; ++v3)
      for (int v4 = 0; v3 + v4 <= v; ++v4) {
        const int v5 = v - v3 - v4;
        const int twice_e = 3 * v3 + 4 * v4 + 5 * v5;
        if (twice_e % 2) continue;
        const int e = twice_e / 2;
        const int f = 2 + e - v;
        if (f < v) continue;  // the system demands v <= f

        // n_p over p = 333..555 summing to v3
        std::array<int, 10> n{};
        auto emit = [&]() {
          const int t3 = 3 * n[0] + 2 * n[1] + 2 * n[2] + n[3] + n[4] + n[5] +
                         4 * v4 + 5 * v5;
          const int t4 = n[1] + 2 * n[3] + n[4] + 3 * n[6] + 2 * n[7] + n[8];
          const int t5 = n[2] + n[4] + 2 * n[5] + n[7] + 2 * n[8] + 3 * n[9];
          if (t3 % 3 || t4 % 4 || t5 % 5) return;
          const int f3 = t3 / 3, f4 = t4 / 4, f5 = t5 / 5;
          if (f3 + f4 + f5 != f) return;
          DegreeCombination c;
          c.v3 = v3; c.v4 = v4; c.v5 = v5;
          c.f3 = f3; c.f4 = f4; c.f5 = f5;
          c.v = v; c.e = e; c.f = f;
          c.n = n;
          out.push_back(c);
        };
        // nested enumeration with budget
        std::function<void(int, int)> rec = [&](int idx, int rem) {
          if (idx == 9) {
            n[9] = rem;
            emit();
            return;
          }
          for (int x = 0; x <= rem; ++x) {
            n[idx] = x;
            rec(idx + 1, rem - x);
          }
          n[idx] = 0;
        };
        rec(0, v3);
      }
  }
  std::sort(out.begin(), out.end(), [](const DegreeCombination& a,
                                       const DegreeCombination& b) {
    auto key = [](const DegreeCombination& c) {
      return std::tuple(c.v, c.v3, c.v4, c.v5, c.n);
    };
    return key(a) < key(b);
  });
  return out;
}

std::vector<DegreeCombination> filter_combinations(
    const std::vector<DegreeCombination>& in) {
  std::vector<DegreeCombination> out;
  for (const auto& c : in) {
    const int n335 = c.n[2], n345 = c.n[4], n355 = c.n[5];
    const bool fact1 = c.v5 == 0 || c.f5 == 0 || n335 > 0;
    const bool fact2 = n335 != 1 || n345 > 0 || n355 > 0;
    if (fact1 && fact2) out.push_back(c);
  }
  return out;
}

}  // namespace curv
