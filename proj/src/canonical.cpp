// Exact canonical form by equitable refinement plus backtracking over the
// remaining label choices. Disconnected graphs are canonicalized component by
// component and assembled in sorted order, which keeps the search tiny on the
// sparse graphs the oracle spends most of its time on.

#include <algorithm>
#include <array>
#include <cstring>

#include "ramsey/graph.hpp"

namespace ramsey {

namespace {

constexpr uint64_t bit(int v) { return 1ull << v; }

struct ConnCanon {
  const uint64_t* adj;  // rows of the (connected) graph
  int n;
  std::string bestBits;
  std::array<uint8_t, kMaxOrder> bestPos{};
  bool haveBest = false;

  // Refine to an equitable partition. color[v] in [0,m); class ids are
  // assigned by sorted (old color, neighbor-count vector) keys, so the
  // resulting ordering depends only on the isomorphism type.
  int refine(uint8_t* color, int m) const {
    std::array<int, kMaxOrder> idx;
    for (;;) {
      std::array<uint64_t, kMaxOrder> mask{};
      for (int v = 0; v < n; ++v) mask[color[v]] |= bit(v);
      uint8_t cnt[kMaxOrder][kMaxOrder];
      for (int v = 0; v < n; ++v)
        for (int c = 0; c < m; ++c)
          cnt[v][c] = static_cast<uint8_t>(std::popcount(adj[v] & mask[c]));
      for (int v = 0; v < n; ++v) idx[v] = v;
      std::sort(idx.begin(), idx.begin() + n, [&](int a, int b) {
        if (color[a] != color[b]) return color[a] < color[b];
        return std::memcmp(cnt[a], cnt[b], m) < 0;
      });
      std::array<uint8_t, kMaxOrder> next{};
      int m2 = 0;
      for (int i = 0; i < n; ++i) {
        if (i > 0) {
          int a = idx[i - 1], b = idx[i];
          if (color[a] != color[b] || std::memcmp(cnt[a], cnt[b], m) != 0) ++m2;
        }
        next[idx[i]] = static_cast<uint8_t>(m2);
      }
      ++m2;
      if (m2 == m) return m;  // same class count within old classes: equitable
      std::memcpy(color, next.data(), n);
      m = m2;
    }
  }

  // An equitable partition where every class is internally empty or complete
  // and every class pair is fully joined or fully separated determines the
  // adjacency matrix regardless of the order inside classes.
  bool homogeneous(const uint8_t* color, int m) const {
    std::array<uint64_t, kMaxOrder> mask{};
    std::array<int, kMaxOrder> rep, size{};
    rep.fill(-1);
    for (int v = 0; v < n; ++v) {
      mask[color[v]] |= bit(v);
      ++size[color[v]];
      if (rep[color[v]] < 0) rep[color[v]] = v;
    }
    for (int c = 0; c < m; ++c) {
      int internal = std::popcount(adj[rep[c]] & mask[c]);
      if (internal != 0 && internal != size[c] - 1) return false;
      for (int d = 0; d < m; ++d) {
        if (d == c) continue;
        int cross = std::popcount(adj[rep[c]] & mask[d]);
        if (cross != 0 && cross != size[d]) return false;
      }
    }
    return true;
  }

  void emit(const uint8_t* color) {
    std::array<uint8_t, kMaxOrder> pos;
    int at = 0;
    for (int c = 0; at < n; ++c)
      for (int v = 0; v < n; ++v)
        if (color[v] == c) pos[at++] = static_cast<uint8_t>(v);
    std::string bits((binom2(n) + 7) / 8, '\0');
    int b = 0;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i, ++b)
        if (adj[pos[i]] & bit(pos[j])) bits[b >> 3] |= static_cast<char>(0x80u >> (b & 7));
    if (!haveBest || bits < bestBits) {
      bestBits = std::move(bits);
      bestPos = pos;
      haveBest = true;
    }
  }

  void search(uint8_t* color, int m) {
    m = refine(color, m);
    if (m == n || homogeneous(color, m)) {
      emit(color);
      return;
    }
    // first smallest class with >= 2 vertices
    std::array<int, kMaxOrder> size{};
    for (int v = 0; v < n; ++v) ++size[color[v]];
    int target = -1;
    for (int c = 0; c < m; ++c)
      if (size[c] >= 2 && (target < 0 || size[c] < size[target])) target = c;
    for (int v = 0; v < n; ++v) {
      if (color[v] != target) continue;
      std::array<uint8_t, kMaxOrder> child;
      std::memcpy(child.data(), color, n);
      for (int u = 0; u < n; ++u)
        if (color[u] == target && u != v) child[u] = static_cast<uint8_t>(m);
      search(child.data(), m + 1);
    }
  }

  void run() {
    std::array<uint8_t, kMaxOrder> color{};
    search(color.data(), 1);
  }
};

Graph relabel(const Graph& g, const uint8_t* pos) {
  const int n = g.order();
  Graph out(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (g.has_edge(pos[a], pos[b])) out.add_edge(a, b);
  return out;
}

std::string pack_bits(const Graph& g) {
  const int n = g.order();
  std::string bits((binom2(n) + 7) / 8, '\0');
  int b = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++b)
      if (g.has_edge(i, j)) bits[b >> 3] |= static_cast<char>(0x80u >> (b & 7));
  return bits;
}

}  // namespace

CanonResult canonicalize(const Graph& g) {
  const int n = g.order();
  if (n == 0) return {Graph(0), std::string(1, '\0')};

  std::vector<uint64_t> comps = component_masks(g);
  std::array<uint8_t, kMaxOrder> pos{};

  if (comps.size() == 1) {
    std::array<uint64_t, kMaxOrder> rows{};
    for (int v = 0; v < n; ++v) rows[v] = g.neighbors(v);
    ConnCanon cc{rows.data(), n, {}, {}, false};
    cc.run();
    pos = cc.bestPos;
  } else {
    struct Part {
      int size;
      std::string bits;
      std::array<uint8_t, kMaxOrder> pos;
      std::array<uint8_t, kMaxOrder> orig;
    };
    std::vector<Part> parts;
    parts.reserve(comps.size());
    for (uint64_t comp : comps) {
      Part p;
      p.size = std::popcount(comp);
      int i = 0;
      for (uint64_t m = comp; m; m &= m - 1) p.orig[i++] = static_cast<uint8_t>(std::countr_zero(m));
      Graph h = g.induced(comp);
      std::array<uint64_t, kMaxOrder> rows{};
      for (int v = 0; v < p.size; ++v) rows[v] = h.neighbors(v);
      ConnCanon cc{rows.data(), p.size, {}, {}, false};
      cc.run();
      p.bits = std::move(cc.bestBits);
      p.pos = cc.bestPos;
      parts.push_back(std::move(p));
    }
    std::sort(parts.begin(), parts.end(), [](const Part& a, const Part& b) {
      if (a.size != b.size) return a.size > b.size;
      return a.bits < b.bits;
    });
    int at = 0;
    for (const Part& p : parts)
      for (int i = 0; i < p.size; ++i) pos[at++] = p.orig[p.pos[i]];
  }

  Graph cf = relabel(g, pos.data());
  Certificate cert;
  cert.push_back(static_cast<char>(n));
  cert += pack_bits(cf);
  return {std::move(cf), std::move(cert)};
}

Certificate canonical_certificate(const Graph& g) { return canonicalize(g).cert; }

Graph canonical_form(const Graph& g) { return canonicalize(g).graph; }

}  // namespace ramsey
