#include "curv/map.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>
#include <stdexcept>

namespace curv {

namespace {

void check_permutation(const std::vector<int>& p, const char* name) {
  const int n = static_cast<int>(p.size());
  std::vector<char> seen(n, 0);
  for (int x : p) {
    if (x < 0 || x >= n) throw std::invalid_argument(std::string(name) + " out of range");
    if (seen[x]) throw std::invalid_argument(std::string(name) + " is not a permutation");
    seen[x] = 1;
  }
}

}  // namespace

EmbeddedMap::EmbeddedMap(std::vector<int> sigma, std::vector<int> alpha)
    : sigma_(std::move(sigma)), alpha_(std::move(alpha)) {
  const int n = dart_count();
  if (n == 0 || n % 2 != 0)
    throw std::invalid_argument("dart count must be positive and even");
  if (static_cast<int>(alpha_.size()) != n)
    throw std::invalid_argument("sigma/alpha size mismatch");
  check_permutation(sigma_, "sigma");
  check_permutation(alpha_, "alpha");
  for (int d = 0; d < n; ++d) {
    if (alpha_[d] == d || alpha_[alpha_[d]] != d)
      throw std::invalid_argument("alpha is not a fixed-point-free involution");
  }

  sigma_inv_.assign(n, 0);
  for (int d = 0; d < n; ++d) sigma_inv_[sigma_[d]] = d;

  // Vertices = sigma orbits, ids in order of smallest dart.
  vertex_of_.assign(n, -1);
  for (int d = 0; d < n; ++d) {
    if (vertex_of_[d] != -1) continue;
    const int v = static_cast<int>(rotations_.size());
    rotations_.emplace_back();
    int cur = d;
    do {
      vertex_of_[cur] = v;
      rotations_[v].push_back(cur);
      cur = sigma_[cur];
    } while (cur != d);
  }

  edge_of_.assign(n, -1);
  for (int d = 0; d < n; ++d) {
    if (edge_of_[d] != -1) continue;
    const int e = static_cast<int>(edge_darts_.size());
    edge_of_[d] = e;
    edge_of_[alpha_[d]] = e;
    edge_darts_.emplace_back(d, alpha_[d]);
  }

  face_of_.assign(n, -1);
  for (int d = 0; d < n; ++d) {
    if (face_of_[d] != -1) continue;
    const int f = static_cast<int>(face_walks_.size());
    face_walks_.emplace_back();
    int cur = d;
    do {
      face_of_[cur] = f;
      face_walks_[f].push_back(cur);
      cur = phi(cur);
    } while (cur != d);
  }

  // Connectedness: <sigma, alpha> must act transitively on darts.
  std::vector<char> reached(n, 0);
  std::vector<int> stack{0};
  reached[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int d = stack.back();
    stack.pop_back();
    for (int e : {sigma_[d], alpha_[d]}) {
      if (!reached[e]) {
        reached[e] = 1;
        ++count;
        stack.push_back(e);
      }
    }
  }
  if (count != n) throw std::invalid_argument("map is not connected");
}

bool EmbeddedMap::is_simple() const {
  std::set<std::pair<int, int>> seen;
  for (const auto& [d, dd] : edge_darts_) {
    int u = vertex_of_[d], v = vertex_of_[dd];
    if (u == v) return false;
    if (!seen.insert({std::min(u, v), std::max(u, v)}).second) return false;
  }
  return true;
}

std::vector<std::vector<int>> EmbeddedMap::rotation_lists() const {
  std::vector<std::vector<int>> out(vertex_count());
  for (int v = 0; v < vertex_count(); ++v) {
    out[v].reserve(rotations_[v].size());
    for (Dart d : rotations_[v]) out[v].push_back(head_of(d));
  }
  return out;
}

EmbeddedMap build_map(const std::vector<std::vector<int>>& rotations) {
  const int nv = static_cast<int>(rotations.size());
  if (nv == 0) throw std::invalid_argument("empty rotation system");

  std::vector<int> offset(nv + 1, 0);
  for (int v = 0; v < nv; ++v) {
    offset[v + 1] = offset[v] + static_cast<int>(rotations[v].size());
    std::set<int> uniq;
    for (int w : rotations[v]) {
      if (w < 0 || w >= nv) throw std::invalid_argument("neighbor out of range");
      if (w == v) throw std::invalid_argument("loop in rotation list");
      if (!uniq.insert(w).second)
        throw std::invalid_argument("repeated neighbor in rotation list");
    }
  }
  const int n = offset[nv];

  std::vector<int> sigma(n), alpha(n, -1);
  for (int v = 0; v < nv; ++v) {
    const int deg = static_cast<int>(rotations[v].size());
    if (deg == 0) throw std::invalid_argument("isolated vertex");
    for (int i = 0; i < deg; ++i) sigma[offset[v] + i] = offset[v] + (i + 1) % deg;
  }
  for (int v = 0; v < nv; ++v) {
    for (int i = 0; i < static_cast<int>(rotations[v].size()); ++i) {
      const int w = rotations[v][i];
      if (w < v) continue;
      // find v in w's list
      int j = -1;
      for (int k = 0; k < static_cast<int>(rotations[w].size()); ++k)
        if (rotations[w][k] == v) j = k;
      if (j < 0) throw std::invalid_argument("asymmetric adjacency");
      alpha[offset[v] + i] = offset[w] + j;
      alpha[offset[w] + j] = offset[v] + i;
    }
  }
  for (int d = 0; d < n; ++d)
    if (alpha[d] < 0) throw std::invalid_argument("asymmetric adjacency");

  return EmbeddedMap(std::move(sigma), std::move(alpha));
}

namespace wordgen {

namespace {

// Generates the BFS word from one root; compares lazily against `best` and
// bails out as soon as the candidate is worse. Returns true if the candidate
// became the new best.
bool word_from_root(const std::vector<int>& next, const std::vector<int>& alpha,
                    int root, Bytes& best, std::vector<int>& label,
                    std::vector<int>& order, int epoch,
                    std::vector<int>& stamp) {
  const int n = static_cast<int>(next.size());
  bool strictly_better = best.empty();
  order.clear();
  order.push_back(root);
  label[root] = 0;
  stamp[root] = epoch;
  int assigned = 1;
  int pos = 0;
  Bytes cand;
  cand.reserve(2 * n);
  for (int i = 0; i < static_cast<int>(order.size()); ++i) {
    const int d = order[i];
    for (int e : {next[d], alpha[d]}) {
      if (stamp[e] != epoch) {
        stamp[e] = epoch;
        label[e] = assigned++;
        order.push_back(e);
      }
      const std::uint8_t w = static_cast<std::uint8_t>(label[e]);
      if (!strictly_better) {
        if (w > best[pos]) return false;
        if (w < best[pos]) strictly_better = true;
      }
      cand.push_back(w);
      ++pos;
    }
  }
  assert(static_cast<int>(cand.size()) == 2 * n);
  if (strictly_better) {
    best = std::move(cand);
    return true;
  }
  return false;
}

}  // namespace

Bytes min_word(const std::vector<int>& sigma, const std::vector<int>& sigma_inv,
               const std::vector<int>& alpha, const std::vector<int>& roots,
               bool include_mirror) {
  const int n = static_cast<int>(sigma.size());
  if (n > 255) throw std::invalid_argument("map too large for byte words");
  Bytes best;
  std::vector<int> label(n), order, stamp(n, -1);
  order.reserve(n);
  int epoch = 0;
  for (int r : roots) word_from_root(sigma, alpha, r, best, label, order, epoch++, stamp);
  if (include_mirror)
    for (int r : roots) word_from_root(sigma_inv, alpha, r, best, label, order, epoch++, stamp);
  return best;
}

}  // namespace wordgen

CanonicalCode canonical_code(const EmbeddedMap& m, IsoMode mode) {
  std::vector<int> roots(m.dart_count());
  std::iota(roots.begin(), roots.end(), 0);
  Bytes w = wordgen::min_word(m.sigma_perm(), m.sigma_inv_perm(), m.alpha_perm(),
                              roots, mode == IsoMode::OP_OR);
  Bytes code;
  code.push_back(static_cast<std::uint8_t>(m.dart_count()));
  code.insert(code.end(), w.begin(), w.end());
  return CanonicalCode{mode, std::move(code)};
}

IsoClass are_isomorphic(const EmbeddedMap& a, const EmbeddedMap& b) {
  if (a.dart_count() != b.dart_count() || a.vertex_count() != b.vertex_count() ||
      a.face_count() != b.face_count())
    return IsoClass::None;
  std::vector<int> roots(a.dart_count());
  std::iota(roots.begin(), roots.end(), 0);
  const Bytes wa = wordgen::min_word(a.sigma_perm(), a.sigma_inv_perm(),
                                     a.alpha_perm(), roots, false);
  const Bytes wb = wordgen::min_word(b.sigma_perm(), b.sigma_inv_perm(),
                                     b.alpha_perm(), roots, false);
  if (wa == wb) return IsoClass::OP;
  // Mirror of b: same alpha, reversed rotations.
  const Bytes wbm = wordgen::min_word(b.sigma_inv_perm(), b.sigma_perm(),
                                      b.alpha_perm(), roots, false);
  if (wa == wbm) return IsoClass::OROnly;
  return IsoClass::None;
}

namespace {

// Deterministic single-root traversal; fills order of first visit.
void traversal_order(const std::vector<int>& next, const std::vector<int>& alpha,
                     int root, std::vector<int>& order) {
  const int n = static_cast<int>(next.size());
  std::vector<char> seen(n, 0);
  order.clear();
  order.push_back(root);
  seen[root] = 1;
  for (int i = 0; i < static_cast<int>(order.size()); ++i) {
    const int d = order[i];
    for (int e : {next[d], alpha[d]}) {
      if (!seen[e]) {
        seen[e] = 1;
        order.push_back(e);
      }
    }
  }
}

Bytes word_of(const std::vector<int>& next, const std::vector<int>& alpha, int root) {
  const int n = static_cast<int>(next.size());
  std::vector<int> label(n, -1), order;
  traversal_order(next, alpha, root, order);
  for (int i = 0; i < n; ++i) label[order[i]] = i;
  Bytes w;
  w.reserve(2 * n);
  for (int d : order) {
    w.push_back(static_cast<std::uint8_t>(label[next[d]]));
    w.push_back(static_cast<std::uint8_t>(label[alpha[d]]));
  }
  return w;
}

}  // namespace

std::vector<MapAutomorphism> automorphism_group(const EmbeddedMap& m) {
  const int n = m.dart_count();
  const auto& sig = m.sigma_perm();
  const auto& sig_inv = m.sigma_inv_perm();
  const auto& alf = m.alpha_perm();

  const Bytes ref = word_of(sig, alf, 0);
  std::vector<int> ref_order;
  traversal_order(sig, alf, 0, ref_order);

  std::vector<MapAutomorphism> out;
  std::vector<int> cand_order;
  for (int reversed = 0; reversed < 2; ++reversed) {
    const auto& next = reversed ? sig_inv : sig;
    for (int r = 0; r < n; ++r) {
      if (word_of(next, alf, r) != ref) continue;
      traversal_order(next, alf, r, cand_order);
      MapAutomorphism a;
      a.orientation_reversing = reversed;
      a.dart_perm.assign(n, -1);
      for (int i = 0; i < n; ++i) a.dart_perm[ref_order[i]] = cand_order[i];
      out.push_back(std::move(a));
    }
  }
  return out;
}

int connectivity(const EmbeddedMap& m) {
  const int nv = m.vertex_count();
  std::vector<std::set<int>> adj(nv);
  for (int e = 0; e < m.edge_count(); ++e) {
    auto [d, dd] = m.edge_darts(e);
    const int u = m.vertex_of(d), v = m.vertex_of(dd);
    adj[u].insert(v);
    adj[v].insert(u);
  }

  auto connected_without = [&](const std::vector<int>& removed) {
    std::vector<char> gone(nv, 0);
    for (int r : removed) gone[r] = 1;
    int start = -1, alive = 0;
    for (int v = 0; v < nv; ++v)
      if (!gone[v]) {
        ++alive;
        start = v;
      }
    if (alive <= 1) return true;
    std::vector<char> seen(nv, 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    int cnt = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v])
        if (!gone[w] && !seen[w]) {
          seen[w] = 1;
          ++cnt;
          stack.push_back(w);
        }
    }
    return cnt == alive;
  };

  if (!connected_without({})) return 0;
  std::vector<int> cut;
  for (int k = 1; k <= 3 && k < nv; ++k) {
    // all k-subsets
    cut.assign(k, 0);
    std::iota(cut.begin(), cut.end(), 0);
    while (true) {
      if (!connected_without(cut)) return k;
      int i = k - 1;
      while (i >= 0 && cut[i] == nv - k + i) --i;
      if (i < 0) break;
      ++cut[i];
      for (int j = i + 1; j < k; ++j) cut[j] = cut[j - 1] + 1;
    }
  }
  return std::min(4, nv - 1);
}

}  // namespace curv
