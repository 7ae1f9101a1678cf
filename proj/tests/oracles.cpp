#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace posetlab::testing {

namespace {

// Walks from v of length <= radius staying right of (or at) the final
// vertex; records u when the whole walk satisfies pos >= pos[u].
void walk(const CoverGraph& g, const VertexOrder& pi, int radius,
          std::vector<int>& path, Bits& out) {
  const int here = path.back();
  int lo = pi.pos[here];
  for (int w : path) lo = std::min(lo, pi.pos[w]);
  if (lo == pi.pos[here]) out.set(here);
  if (static_cast<int>(path.size()) > radius) return;
  for (int nb : g.adj[here]) {
    path.push_back(nb);
    walk(g, pi, radius, path, out);
    path.pop_back();
  }
}

}  // namespace

Bits oracle_weak_reach_from(const CoverGraph& g, const VertexOrder& pi, int v,
                            int radius) {
  Bits out(g.n);
  std::vector<int> path{v};
  walk(g, pi, radius, path, out);
  return out;
}

bool oracle_reversible(const Poset& p, const std::vector<IncPair>& pairs) {
  return oracle_smallest_reversing(p, pairs).has_value();
}

std::optional<std::vector<int>> oracle_smallest_reversing(
    const Poset& p, const std::vector<IncPair>& pairs) {
  const int n = p.size();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> pos(n);
  do {
    for (int i = 0; i < n; ++i) pos[perm[i]] = i;
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) {
      Bits up = p.strict_upset(v);
      for (auto u = up.find_first(); u != Bits::npos; u = up.find_next(u))
        if (pos[u] < pos[v]) {
          ok = false;
          break;
        }
    }
    for (size_t i = 0; i < pairs.size() && ok; ++i)
      if (pos[pairs[i].y] > pos[pairs[i].x]) ok = false;
    if (ok) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

namespace {

int edge_bit(int i, int j, int n) {
  if (i > j) std::swap(i, j);
  int b = 0;
  for (int a = 0; a < i; ++a) b += n - a - 1;
  return b + (j - i - 1);
}

}  // namespace

const std::vector<CoverGraph>& graph_atlas(int n, bool connected_only) {
  static std::map<std::pair<int, bool>, std::vector<CoverGraph>> cache;
  auto it = cache.find({n, connected_only});
  if (it != cache.end()) return it->second;

  const int nbits = n * (n - 1) / 2;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> perms;
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<CoverGraph> out;
  for (unsigned mask = 0; mask < (1u << nbits); ++mask) {
    unsigned canon = mask;
    for (const auto& pm : perms) {
      unsigned m2 = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (mask & (1u << edge_bit(i, j, n)))
            m2 |= 1u << edge_bit(pm[i], pm[j], n);
      canon = std::min(canon, m2);
    }
    if (canon != mask) continue;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (mask & (1u << edge_bit(i, j, n))) edges.push_back({i, j});
    CoverGraph g = CoverGraph::from_edges(n, edges);
    if (!connected_only || g.connected()) out.push_back(std::move(g));
  }
  return cache[{n, connected_only}] = std::move(out);
}

std::vector<std::vector<bool>> oracle_closure(
    int n, const std::vector<std::pair<int, int>>& covers) {
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (auto [lo, hi] : covers) leq[lo][hi] = true;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (leq[i][k] && leq[k][j]) leq[i][j] = true;
  return leq;
}

}  // namespace posetlab::testing
