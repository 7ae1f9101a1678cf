#include "posetlab/wcol.hpp"

#include <algorithm>
#include <numeric>

#include "posetlab/errors.hpp"
#include "posetlab/sampler.hpp"

namespace posetlab {

VertexOrder VertexOrder::from_order(std::vector<int> order) {
  const int n = static_cast<int>(order.size());
  VertexOrder o;
  o.order = std::move(order);
  o.pos.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    const int v = o.order[i];
    if (v < 0 || v >= n || o.pos[v] != -1)
      throw IndexError("order is not a permutation of [0, n)");
    o.pos[v] = i;
  }
  return o;
}

VertexOrder VertexOrder::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return from_order(std::move(v));
}

int VertexOrder::leftmost(const std::vector<int>& vs) const {
  if (vs.empty()) throw PreconditionError("leftmost of empty set");
  int best = vs[0];
  for (int v : vs)
    if (pos[v] < pos[best]) best = v;
  return best;
}

ReachProfile weak_reach(const CoverGraph& g, const VertexOrder& pi, int radius) {
  if (radius < 0) throw PreconditionError("negative radius");
  if (pi.size() != g.n) throw PreconditionError("order size != vertex count");
  const int n = g.n;
  ReachProfile prof;
  prof.radius = radius;
  prof.sets.assign(n, Bits(n));

  // u lands in sets[v] iff v is reached from u within `radius` steps
  // using only vertices at positions >= pos[u]; the reversed BFS path
  // then witnesses u as the leftmost vertex.
  std::vector<int> dist(n);
  std::vector<int> queue(n);
  for (int u = 0; u < n; ++u) {
    std::fill(dist.begin(), dist.end(), -1);
    int head = 0, tail = 0;
    dist[u] = 0;
    queue[tail++] = u;
    prof.sets[u].set(u);
    while (head < tail) {
      const int v = queue[head++];
      if (dist[v] == radius) continue;
      for (int w : g.adj[v]) {
        if (dist[w] >= 0 || pi.pos[w] < pi.pos[u]) continue;
        dist[w] = dist[v] + 1;
        queue[tail++] = w;
        prof.sets[w].set(u);
      }
    }
  }
  for (int v = 0; v < n; ++v)
    prof.max_size =
        std::max(prof.max_size, static_cast<int>(prof.sets[v].count()));
  return prof;
}

int wcol_under_order(const CoverGraph& g, const VertexOrder& pi, int radius) {
  return weak_reach(g, pi, radius).max_size;
}

namespace {

// Same BFS as weak_reach but only the maximum set size, with an early
// abort once `cap` is hit; used by the exhaustive loop.
int wcol_value_capped(const CoverGraph& g, const std::vector<int>& pos,
                      int radius, int cap, std::vector<int>& dist,
                      std::vector<int>& queue, std::vector<int>& cnt) {
  const int n = g.n;
  std::fill(cnt.begin(), cnt.end(), 1);  // every v weakly reaches itself
  for (int u = 0; u < n; ++u) {
    std::fill(dist.begin(), dist.end(), -1);
    int head = 0, tail = 0;
    dist[u] = 0;
    queue[tail++] = u;
    while (head < tail) {
      const int v = queue[head++];
      if (dist[v] == radius) continue;
      for (int w : g.adj[v]) {
        if (dist[w] >= 0 || pos[w] < pos[u]) continue;
        dist[w] = dist[v] + 1;
        queue[tail++] = w;
        if (w != u && ++cnt[w] >= cap) return cap;
      }
    }
  }
  int best = 0;
  for (int v = 0; v < n; ++v) best = std::max(best, cnt[v]);
  return best;
}

}  // namespace

WcolExact wcol_exact(const CoverGraph& g, int radius, int max_n) {
  if (g.n > max_n)
    throw SizeLimitError("exhaustive wcol limited to n <= " +
                         std::to_string(max_n) + ", got n = " +
                         std::to_string(g.n));
  if (radius < 0) throw PreconditionError("negative radius");
  if (g.n == 0) return {0, VertexOrder::identity(0)};

  std::vector<int> order(g.n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> pos(g.n), dist(g.n), queue(g.n), cnt(g.n);
  int best = g.n + 1;
  std::vector<int> best_order;
  do {
    for (int i = 0; i < g.n; ++i) pos[order[i]] = i;
    const int v = wcol_value_capped(g, pos, radius, best, dist, queue, cnt);
    if (v < best) {
      best = v;
      best_order = order;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return {best, VertexOrder::from_order(std::move(best_order))};
}

VertexOrder smallest_last_order(const CoverGraph& g) {
  const int n = g.n;
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = static_cast<int>(g.adj[v].size());
  std::vector<char> removed(n, 0);
  std::vector<int> order(n);
  for (int k = n - 1; k >= 0; --k) {
    int pick = -1;
    for (int v = 0; v < n; ++v)
      if (!removed[v] && (pick == -1 || deg[v] < deg[pick])) pick = v;
    removed[pick] = 1;
    order[k] = pick;
    for (int w : g.adj[pick])
      if (!removed[w]) --deg[w];
  }
  return VertexOrder::from_order(std::move(order));
}

namespace {

VertexOrder bfs_order(const CoverGraph& g) {
  const int n = g.n;
  std::vector<char> seen(n, 0);
  std::vector<int> order;
  order.reserve(n);
  for (int root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = 1;
    size_t head = order.size();
    order.push_back(root);
    while (head < order.size()) {
      const int v = order[head++];
      for (int w : g.adj[v])
        if (!seen[w]) {
          seen[w] = 1;
          order.push_back(w);
        }
    }
  }
  return VertexOrder::from_order(std::move(order));
}

}  // namespace

WcolHeuristic wcol_heuristic(const CoverGraph& g, int radius,
                             const HeuristicParams& params) {
  if (g.n == 0) return {0, VertexOrder::identity(0)};
  switch (params.strategy) {
    case OrderStrategy::smallest_last: {
      VertexOrder o = smallest_last_order(g);
      return {wcol_under_order(g, o, radius), std::move(o)};
    }
    case OrderStrategy::bfs: {
      VertexOrder o = bfs_order(g);
      return {wcol_under_order(g, o, radius), std::move(o)};
    }
    case OrderStrategy::random_restart:
      break;
  }

  // Plateau walk over adjacent transpositions, restarted from random
  // permutations every `block` accepted-or-rejected moves.  The first
  // block refines the smallest-last order.
  Rng rng(params.seed);
  const int block = 50;
  std::vector<int> cur = smallest_last_order(g).order;
  auto value_of = [&](const std::vector<int>& ord) {
    return wcol_under_order(g, VertexOrder::from_order(ord), radius);
  };
  int cur_val = value_of(cur);
  std::vector<int> best = cur;
  int best_val = cur_val;
  for (int it = 0; it < params.iterations; ++it) {
    if (it > 0 && it % block == 0 && g.n > 1) {
      cur = sample_permutation(rng, g.n);
      cur_val = value_of(cur);
      if (cur_val < best_val) {
        best_val = cur_val;
        best = cur;
      }
    }
    if (g.n < 2) break;
    const int i = static_cast<int>(rand_below(rng, g.n - 1));
    std::swap(cur[i], cur[i + 1]);
    const int v = value_of(cur);
    if (v <= cur_val) {
      cur_val = v;
      if (v < best_val) {
        best_val = v;
        best = cur;
      }
    } else {
      std::swap(cur[i], cur[i + 1]);
    }
  }
  return {best_val, VertexOrder::from_order(std::move(best))};
}

ReachComposition check_reach_composition(const CoverGraph& g,
                                         const VertexOrder& pi, int w, int x,
                                         int y, int z, int k, int l,
                                         const std::vector<int>& q) {
  auto check_id = [&](int v) {
    if (v < 0 || v >= g.n) throw PreconditionError("vertex id outside [0, n)");
  };
  check_id(w);
  check_id(x);
  check_id(y);
  check_id(z);
  if (k < 0 || l < 0) throw PreconditionError("negative radius");
  if (q.empty() || q.front() != x || q.back() != z)
    throw PreconditionError("q must be a path from x to z");
  std::vector<char> on_path(g.n, 0);
  for (size_t i = 0; i < q.size(); ++i) {
    check_id(q[i]);
    if (on_path[q[i]]) throw PreconditionError("q revisits a vertex");
    on_path[q[i]] = 1;
    if (i > 0 && !std::binary_search(g.adj[q[i - 1]].begin(),
                                     g.adj[q[i - 1]].end(), q[i]))
      throw PreconditionError("q uses a non-edge");
  }
  if (!weak_reach(g, pi, k).contains(x, w))
    throw PreconditionError("w not weakly k-reachable from x");
  if (!weak_reach(g, pi, l).contains(z, y))
    throw PreconditionError("y not weakly l-reachable from z");
  const int left_wy = std::min(pi.pos[w], pi.pos[y]);
  int left_q = pi.pos[q[0]];
  for (int v : q) left_q = std::min(left_q, pi.pos[v]);
  if (left_wy > left_q)
    throw PreconditionError("leftmost of {w, y} is right of leftmost of q");

  const int m = static_cast<int>(q.size()) - 1;
  ReachProfile prof = weak_reach(g, pi, k + l + m);
  return {prof.contains(y, w), prof.contains(w, y)};
}

}  // namespace posetlab
