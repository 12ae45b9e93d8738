#include "ramsey/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <climits>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_set>
#include <vector>

namespace ramsey {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

using Sink = std::function<void(const Graph&, const Certificate&)>;

struct EnumSpec {
  int target = 0;
  const GraphFilter* filter = nullptr;  // hereditary, may point to empty fn
  const GraphFilter* prune = nullptr;   // extra hereditary cut, counted separately
};

bool passes(const GraphFilter* f, const Graph& g) { return !f || !*f || (*f)(g); }

// Canonical augmentation: extend a canonical representative by one vertex in
// every possible way, deduplicate the children within the parent by
// certificate, and keep a child only if deleting the last vertex of its
// canonical form lands back in the parent's isomorphism class. Each class of
// each order is reached exactly once.
void extend(const Graph& parent, const Certificate& parentCert, int stopAt, const EnumSpec& spec,
            EnumerationStats& st, const Sink& sink) {
  const int q = parent.order();
  if (q == stopAt) {
    sink(parent, parentCert);
    return;
  }
  std::unordered_set<Certificate> seen;
  const uint64_t total = 1ull << q;
  for (uint64_t nb = 0; nb < total; ++nb) {
    ++st.graphsVisited;
    Graph child = parent.with_vertex(nb);
    if (spec.prune && *spec.prune && !(*spec.prune)(child)) {
      ++st.prunedByDegreeBounds;
      continue;
    }
    if (!passes(spec.filter, child)) continue;
    CanonResult cr = canonicalize(child);
    if (!seen.insert(cr.cert).second) continue;
    if (canonical_certificate(cr.graph.without_vertex(q)) != parentCert) continue;
    extend(cr.graph, cr.cert, stopAt, spec, st, sink);
  }
}

EnumerationStats run_serial(const EnumSpec& spec, const Sink& sink) {
  EnumerationStats st;
  st.order = spec.target;
  const auto t0 = Clock::now();
  Graph k1(1);
  if (passes(spec.prune, k1) && passes(spec.filter, k1)) {
    CanonResult root = canonicalize(k1);
    extend(root.graph, root.cert, spec.target, spec, st, sink);
  }
  st.elapsedMs = ms_since(t0);
  return st;
}

EnumerationStats run_parallel(const EnumSpec& spec, int jobs, const Sink& sink) {
  if (jobs <= 1 || spec.target <= 4) return run_serial(spec, sink);
  EnumerationStats st;
  st.order = spec.target;
  const auto t0 = Clock::now();

  // Enumerate serially to a split level, then hand each subtree to a worker.
  const int split = std::min(6, spec.target - 1);
  std::vector<std::pair<Graph, Certificate>> roots;
  Graph k1(1);
  if (passes(spec.prune, k1) && passes(spec.filter, k1)) {
    CanonResult root = canonicalize(k1);
    EnumSpec rootSpec = spec;
    rootSpec.target = split;
    extend(root.graph, root.cert, split, rootSpec, st,
           [&](const Graph& g, const Certificate& c) { roots.emplace_back(g, c); });
  }

  std::atomic<size_t> next{0};
  std::vector<EnumerationStats> parts(jobs);
  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (int w = 0; w < jobs; ++w) {
    pool.emplace_back([&, w] {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= roots.size()) break;
        extend(roots[i].first, roots[i].second, spec.target, spec, parts[w], sink);
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& part : parts) st.absorb(part);
  st.elapsedMs = ms_since(t0);
  return st;
}

void check_enum_order(int order) {
  if (order < 1 || order > kMaxEnumOrder)
    throw std::invalid_argument("enumeration order must be in [1," + std::to_string(kMaxEnumOrder) + "]");
}

// Deterministic reduction over surviving graphs: best metric value with ties
// broken by lexicographically smallest graph6 string, so parallel and serial
// runs agree.
struct Reduce {
  bool wantMax;
  std::function<int64(const Graph&)> metric;
  const GraphVisitor* inspect = nullptr;
  std::mutex mu;
  uint64_t survivors = 0;
  int64 best;
  std::string bestG6;

  explicit Reduce(bool wantMaxIn) : wantMax(wantMaxIn), best(wantMaxIn ? LLONG_MIN : LLONG_MAX) {}

  void add(const Graph& g) {
    int64 v = metric ? metric(g) : 0;
    std::string s = graph6_encode(g);
    std::lock_guard<std::mutex> lock(mu);
    ++survivors;
    bool better = wantMax ? v > best : v < best;
    if (better || (v == best && (bestG6.empty() || s < bestG6))) {
      best = v;
      bestG6 = std::move(s);
    }
    if (inspect && *inspect) (*inspect)(g);
  }
};

EnumerationStats reduce_enumerate(int target, const GraphFilter& filter, const GraphFilter& prune,
                                  int jobs, Reduce& red) {
  EnumSpec spec{target, &filter, &prune};
  Sink sink = [&](const Graph& g, const Certificate&) { red.add(g); };
  return jobs > 1 ? run_parallel(spec, jobs, sink) : run_serial(spec, sink);
}

GraphFilter nm_family_filter(int n, int64 m) {
  return [n, m](const Graph& g) { return g.order() < n || is_nm_graph(g, n, m); };
}

}  // namespace

EnumerationStats enumerate_graphs(int order, const GraphFilter& filter, const GraphVisitor& visit) {
  check_enum_order(order);
  uint64_t delivered = 0;
  EnumSpec spec{order, &filter, nullptr};
  EnumerationStats st = run_serial(spec, [&](const Graph& g, const Certificate&) {
    ++delivered;
    if (visit) visit(g);
  });
  st.graphsAfterFilter = delivered;
  return st;
}

EnumerationStats enumerate_graphs_parallel(int order, const GraphFilter& filter, int jobs,
                                           const GraphVisitor& visit) {
  check_enum_order(order);
  std::atomic<uint64_t> delivered{0};
  EnumSpec spec{order, &filter, nullptr};
  Sink sink = [&](const Graph& g, const Certificate&) {
    delivered.fetch_add(1, std::memory_order_relaxed);
    if (visit) visit(g);
  };
  EnumerationStats st = jobs > 1 ? run_parallel(spec, jobs, sink) : run_serial(spec, sink);
  st.graphsAfterFilter = delivered.load();
  return st;
}

OracleVerdict brute_extremal_e(int n, int64 m, int p, const EnumOptions& opts) {
  check_enum_order(p);
  if (n < 1 || p < n) throw std::invalid_argument("brute_extremal_e: need p >= n >= 1");
  if (m < 0) throw std::invalid_argument("brute_extremal_e: m must be >= 0");
  Reduce red(/*wantMax=*/true);
  red.metric = [](const Graph& g) { return g.edge_count(); };
  red.inspect = &opts.inspect;
  GraphFilter filter = nm_family_filter(n, m);
  EnumerationStats st = reduce_enumerate(p, filter, {}, opts.jobs, red);
  st.graphsAfterFilter = red.survivors;
  return {red.best, red.bestG6, st};
}

OracleVerdict brute_alpha_min(int n, int64 m, int p, const EnumOptions& opts) {
  check_enum_order(p);
  if (n < 1 || p < n) throw std::invalid_argument("brute_alpha_min: need p >= n >= 1");
  if (m < 0) throw std::invalid_argument("brute_alpha_min: m must be >= 0");
  Reduce red(/*wantMax=*/false);
  red.metric = [](const Graph& g) { return independence_number(g); };
  red.inspect = &opts.inspect;
  GraphFilter filter = nm_family_filter(n, m);
  EnumerationStats st = reduce_enumerate(p, filter, {}, opts.jobs, red);
  st.graphsAfterFilter = red.survivors;
  return {red.best, red.bestG6, st};
}

OracleVerdict brute_girth_extremal(int n, int p, const EnumOptions& opts) {
  check_enum_order(p);
  if (n < 3 || p < n) throw std::invalid_argument("brute_girth_extremal: need p >= n >= 3");
  Reduce red(/*wantMax=*/true);
  red.metric = [](const Graph& g) { return g.edge_count(); };
  red.inspect = &opts.inspect;
  GraphFilter filter = [n](const Graph& g) { return girth(g) > n; };
  EnumerationStats st = reduce_enumerate(p, filter, {}, opts.jobs, red);
  st.graphsAfterFilter = red.survivors;
  return {red.best, red.bestG6, st};
}

DegreeBounds degree_prune_bounds(int64 p, int64 rSubK, int64 rSubN) {
  return {std::max<int64>(0, p - rSubK), rSubN - 1};
}

namespace {

using Memo = std::map<std::array<int64, 4>, OracleVerdict>;

OracleVerdict ramsey_search(int64 n, int64 r, int64 k, int64 s, int pMax, const EnumOptions& opts,
                            Memo& memo) {
  if (n < 2 || k < 2 || r < 1 || s < 1)
    throw std::invalid_argument("brute_generalized_ramsey: need n,k >= 2 and r,s >= 1");
  if (pMax < 1 || pMax > kMaxEnumOrder)
    throw std::invalid_argument("brute_generalized_ramsey: pMax must be in [1," +
                                std::to_string(kMaxEnumOrder) + "]");
  const std::array<int64, 4> key{n, r, k, s};
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  const int64 rStar = binom2(n) - r;
  const int nn = static_cast<int>(n), kk = static_cast<int>(k);

  // A graph of order p defeats both clauses exactly when every n-subset has
  // at most rStar edges (vacuous below order n) and every k-subset has at
  // least s edges (vacuous below order k). Both conditions are hereditary.
  GraphFilter filter = [nn, kk, rStar, s](const Graph& g) {
    if (g.order() >= nn && !is_nm_graph(g, nn, rStar)) return false;
    if (g.order() >= kk) {
      if (s == 1) return !has_independent_set(g, kk);
      return satisfies_ks_condition(g, kk, s);
    }
    return true;
  };

  // Degree pruning at the target order, available once the two neighboring
  // values are known exactly.
  std::optional<int64> subK, subN;
  if (s >= 2 && n >= 3 && k >= 3 && r < binom2(n) && s < binom2(k)) {
    EnumOptions quiet{opts.jobs, {}};
    OracleVerdict a = ramsey_search(n, r, k - 1, s, pMax, quiet, memo);
    OracleVerdict b = ramsey_search(n - 1, r, k, s, pMax, quiet, memo);
    subK = a.value;
    subN = b.value;
  }

  OracleVerdict out;
  std::string prevBest;
  for (int p = 1; p <= pMax; ++p) {
    GraphFilter prune;
    if (subK && subN && p >= std::max(n, k)) {
      DegreeBounds db = degree_prune_bounds(p, *subK, *subN);
      prune = [p, db](const Graph& g) {
        const int slack = p - g.order();
        for (int v = 0; v < g.order(); ++v) {
          int d = g.degree(v);
          if (d > db.hi || d + slack < db.lo) return false;
        }
        return true;
      };
    }
    Reduce red(/*wantMax=*/false);
    red.inspect = &opts.inspect;
    EnumerationStats st = reduce_enumerate(p, filter, prune, opts.jobs, red);
    st.graphsAfterFilter = red.survivors;
    out.stats.absorb(st);
    out.stats.order = p;
    out.stats.elapsedMs += st.elapsedMs;
    if (red.survivors == 0) {
      out.value = p;
      out.witnessG6 = prevBest;
      memo[key] = out;
      return out;
    }
    prevBest = red.bestG6;
  }
  out.value.reset();
  out.witnessG6 = prevBest;  // defeats both clauses at pMax, so R > pMax
  memo[key] = out;
  return out;
}

}  // namespace

OracleVerdict brute_generalized_ramsey(const RamseyQuery& q, int pMax, const EnumOptions& opts) {
  Memo memo;
  return ramsey_search(q.n, q.r, q.k, q.s, pMax, opts, memo);
}

uint64_t bitmask_class_count(int p, int jobs) {
  if (p < 1 || p > 7) throw std::invalid_argument("bitmask_class_count: p must be in [1,7]");
  const int nbits = static_cast<int>(binom2(p));
  const uint64_t total = 1ull << nbits;
  std::vector<std::pair<int, int>> pairs;
  for (int j = 1; j < p; ++j)
    for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);

  const int workers = std::max(1, jobs);
  std::vector<std::vector<uint64_t>> keys(workers);
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      const uint64_t lo = total * w / workers, hi = total * (w + 1) / workers;
      keys[w].reserve(static_cast<size_t>(hi - lo) / 4 + 16);
      for (uint64_t mask = lo; mask < hi; ++mask) {
        Graph g(p);
        for (int b = 0; b < nbits; ++b)
          if ((mask >> b) & 1) g.add_edge(pairs[b].first, pairs[b].second);
        Certificate cert = canonical_certificate(g);
        uint64_t key = 0;
        for (size_t i = 1; i < cert.size(); ++i)
          key = (key << 8) | static_cast<unsigned char>(cert[i]);
        keys[w].push_back(key);
      }
    });
  }
  for (auto& t : pool) t.join();
  std::vector<uint64_t> all;
  for (auto& ks : keys) all.insert(all.end(), ks.begin(), ks.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all.size();
}

}  // namespace ramsey
