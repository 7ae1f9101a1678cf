#include "posetlab/poset.hpp"

#include <algorithm>
#include <numeric>

#include "posetlab/errors.hpp"

namespace posetlab {

LinearExtension LinearExtension::from_order(std::vector<int> order) {
  const int n = static_cast<int>(order.size());
  LinearExtension l;
  l.order = std::move(order);
  l.pos.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    const int v = l.order[i];
    if (v < 0 || v >= n || l.pos[v] != -1)
      throw IndexError("order is not a permutation of [0, n)");
    l.pos[v] = i;
  }
  return l;
}

namespace {

// Returns a directed cycle (as a vertex list) if one exists in adj.
std::vector<int> find_directed_cycle(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> state(n, 0);  // 0 new, 1 on stack, 2 done
  std::vector<int> parent(n, -1);
  for (int root = 0; root < n; ++root) {
    if (state[root] != 0) continue;
    std::vector<std::pair<int, size_t>> stack{{root, 0}};
    state[root] = 1;
    while (!stack.empty()) {
      auto& [v, it] = stack.back();
      if (it == adj[v].size()) {
        state[v] = 2;
        stack.pop_back();
        continue;
      }
      const int w = adj[v][it++];
      if (state[w] == 0) {
        state[w] = 1;
        parent[w] = v;
        stack.emplace_back(w, 0);
      } else if (state[w] == 1) {
        std::vector<int> cycle{w};
        for (int u = v; u != w; u = parent[u]) cycle.push_back(u);
        std::reverse(cycle.begin(), cycle.end());
        return cycle;
      }
    }
  }
  return {};
}

}  // namespace

Poset Poset::from_cover_relations(int n,
                                  const std::vector<std::pair<int, int>>& covers) {
  if (n < 0) throw IndexError("negative element count");
  std::vector<std::vector<int>> adj(n);
  for (const auto& [lo, hi] : covers) {
    if (lo < 0 || lo >= n || hi < 0 || hi >= n)
      throw IndexError("cover (" + std::to_string(lo) + ", " +
                       std::to_string(hi) + ") outside [0, " +
                       std::to_string(n) + ")");
    if (lo == hi)
      throw CycleError("cover (" + std::to_string(lo) + ", " +
                       std::to_string(hi) + ") is a self-loop");
    adj[lo].push_back(hi);
  }
  for (auto& a : adj) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }

  // Kahn topological order; leftover in-degree means a cycle.
  std::vector<int> indeg(n, 0);
  for (int v = 0; v < n; ++v)
    for (int w : adj[v]) ++indeg[w];
  std::vector<int> topo;
  topo.reserve(n);
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) topo.push_back(v);
  for (size_t head = 0; head < topo.size(); ++head)
    for (int w : adj[topo[head]])
      if (--indeg[w] == 0) topo.push_back(w);
  if (static_cast<int>(topo.size()) != n) {
    auto cycle = find_directed_cycle(adj);
    std::string msg = "cover relations contain a cycle:";
    for (int v : cycle) msg += " " + std::to_string(v);
    throw CycleError(msg);
  }

  Poset p;
  p.n_ = n;
  p.up_.assign(n, Bits(n));
  p.down_.assign(n, Bits(n));
  p.level_.assign(n, 0);
  p.labels_.assign(n, "");

  // Closure by bitset union in reverse topological order.
  for (int i = n - 1; i >= 0; --i) {
    const int v = topo[i];
    for (int w : adj[v]) {
      p.up_[v] |= p.up_[w];
      p.up_[v].set(w);
    }
  }
  for (int x = 0; x < n; ++x)
    for (auto y = p.up_[x].find_first(); y != Bits::npos;
         y = p.up_[x].find_next(y))
      p.down_[y].set(x);

  // Longest chain DP over the closure's topological order.
  for (int v : topo) {
    int lv = 0;
    for (auto u = p.down_[v].find_first(); u != Bits::npos;
         u = p.down_[v].find_next(u))
      lv = std::max(lv, p.level_[u] + 1);
    // down_ already closed, so this visits all predecessors; correct
    // because level only depends on the maximum.
    p.level_[v] = lv;
  }
  p.height_ = 0;
  for (int v = 0; v < n; ++v) p.height_ = std::max(p.height_, p.level_[v] + 1);
  if (n == 0) p.height_ = 0;

  // Transitive reduction: (x, y) is a cover iff nothing sits between.
  for (int x = 0; x < n; ++x) {
    for (auto y = p.up_[x].find_first(); y != Bits::npos;
         y = p.up_[x].find_next(y)) {
      Bits between = p.up_[x];
      between &= p.down_[y];
      if (between.none()) p.covers_.emplace_back(x, static_cast<int>(y));
    }
  }
  std::sort(p.covers_.begin(), p.covers_.end());
  return p;
}

std::vector<IncPair> Poset::incomparable_pairs() const {
  std::vector<IncPair> out;
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y)
      if (x != y && !up_[x].test(y) && !up_[y].test(x))
        out.push_back({x, y});
  return out;
}

Bits Poset::upset(const Bits& s) const {
  Bits out = s;
  for (auto x = s.find_first(); x != Bits::npos; x = s.find_next(x))
    out |= up_[x];
  return out;
}

Bits Poset::downset(const Bits& s) const {
  Bits out = s;
  for (auto x = s.find_first(); x != Bits::npos; x = s.find_next(x))
    out |= down_[x];
  return out;
}

std::vector<int> Poset::minimal_elements() const {
  std::vector<int> out;
  for (int x = 0; x < n_; ++x)
    if (down_[x].none()) out.push_back(x);
  return out;
}

std::vector<int> Poset::maximal_elements() const {
  std::vector<int> out;
  for (int x = 0; x < n_; ++x)
    if (up_[x].none()) out.push_back(x);
  return out;
}

Poset Poset::induced(const Bits& s, std::vector<int>* original_ids) const {
  std::vector<int> ids;
  for (auto x = s.find_first(); x != Bits::npos; x = s.find_next(x))
    ids.push_back(static_cast<int>(x));
  std::vector<int> newid(n_, -1);
  for (size_t i = 0; i < ids.size(); ++i) newid[ids[i]] = static_cast<int>(i);

  // Feed the restricted strict order; from_cover_relations re-reduces.
  std::vector<std::pair<int, int>> arcs;
  for (int x : ids)
    for (auto y = up_[x].find_first(); y != Bits::npos; y = up_[x].find_next(y))
      if (newid[y] >= 0) arcs.emplace_back(newid[x], newid[y]);
  Poset q = from_cover_relations(static_cast<int>(ids.size()), arcs);
  for (size_t i = 0; i < ids.size(); ++i) q.labels_[i] = labels_[ids[i]];
  if (original_ids) *original_ids = std::move(ids);
  return q;
}

bool Poset::is_linear_extension(const LinearExtension& l) const {
  if (l.size() != n_) return false;
  std::vector<char> seen(n_, 0);
  for (int v : l.order) {
    if (v < 0 || v >= n_ || seen[v]) return false;
    seen[v] = 1;
  }
  for (const auto& [lo, hi] : covers_)
    if (l.pos[lo] >= l.pos[hi]) return false;
  return true;
}

bool Poset::has_labels() const {
  for (const auto& s : labels_)
    if (!s.empty()) return true;
  return false;
}

CoverGraph CoverGraph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
  CoverGraph g;
  g.n = n;
  for (auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw IndexError("edge endpoint outside [0, " + std::to_string(n) + ")");
    if (u == v) throw IndexError("self-loop");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  g.edges = std::move(edges);
  g.adj.assign(n, {});
  for (const auto& [u, v] : g.edges) {
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  for (auto& a : g.adj) std::sort(a.begin(), a.end());
  return g;
}

bool CoverGraph::connected() const { return component_count() <= 1; }

int CoverGraph::component_count() const {
  std::vector<char> seen(n, 0);
  std::vector<int> stack;
  int comps = 0;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++comps;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : adj[v])
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
  }
  return comps;
}

CoverGraph cover_graph(const Poset& p) {
  std::vector<std::pair<int, int>> edges = p.cover_relations();
  return CoverGraph::from_edges(p.size(), std::move(edges));
}

bool verify_standard_example(const Poset& p, const std::vector<IncPair>& pairs) {
  const int m = static_cast<int>(pairs.size());
  if (m == 0) return false;
  std::vector<char> used(p.size(), 0);
  for (const auto& [a, b] : pairs) {
    if (a < 0 || a >= p.size() || b < 0 || b >= p.size()) return false;
    if (used[a] || a == b) return false;
    used[a] = 1;
    if (used[b]) return false;
    used[b] = 1;
  }
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      if (!p.less(pairs[i].x, pairs[j].y)) return false;
      if (p.comparable(pairs[i].x, pairs[j].x)) return false;
      if (p.comparable(pairs[i].y, pairs[j].y)) return false;
    }
    if (p.comparable(pairs[i].x, pairs[i].y)) return false;
  }
  return true;
}

}  // namespace posetlab
