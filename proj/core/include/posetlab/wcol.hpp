#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "posetlab/poset.hpp"

namespace posetlab {

// Total order on the vertices of a graph; same layout as LinearExtension
// but kept separate because it orders graph vertices, not poset elements.
struct VertexOrder {
  std::vector<int> order;  // order[i] = vertex at position i
  std::vector<int> pos;    // pos[v] = position of v

  static VertexOrder from_order(std::vector<int> order);
  static VertexOrder identity(int n);
  int size() const { return static_cast<int>(order.size()); }
  bool before(int a, int b) const { return pos[a] < pos[b]; }
  // Leftmost vertex of a non-empty set.
  int leftmost(const std::vector<int>& vs) const;
};

// sets[v] holds the vertices weakly reachable from v within the radius:
// u is in sets[v] iff some path from v to u of length <= radius has u as
// its unique leftmost vertex.
struct ReachProfile {
  int radius = 0;
  std::vector<Bits> sets;
  int max_size = 0;

  bool contains(int v, int u) const { return sets[v].test(u); }
};

// One BFS per target u inside the subgraph induced by vertices right of
// u (inclusive); O(n * (n + m)).
ReachProfile weak_reach(const CoverGraph& g, const VertexOrder& pi, int radius);

int wcol_under_order(const CoverGraph& g, const VertexOrder& pi, int radius);

// Minimum over all n! orders, with a witnessing order.  Guarded by
// max_n (SizeLimitError beyond it); intended for n <= 9.
struct WcolExact {
  int value = 0;
  VertexOrder order;
};
WcolExact wcol_exact(const CoverGraph& g, int radius, int max_n = 9);

enum class OrderStrategy { smallest_last, bfs, random_restart };

struct HeuristicParams {
  OrderStrategy strategy = OrderStrategy::smallest_last;
  std::uint64_t seed = 0;   // random_restart only
  int iterations = 200;     // random_restart only
};

struct WcolHeuristic {
  int value = 0;
  VertexOrder order;
};
WcolHeuristic wcol_heuristic(const CoverGraph& g, int radius,
                             const HeuristicParams& params = {});

// Smallest-last (degeneracy) order; ties broken by lowest vertex id.
VertexOrder smallest_last_order(const CoverGraph& g);

// Checked instance of the reach-composition fact: if w is weakly
// k-reachable from x, y weakly l-reachable from z, q is a path from x
// to z, and the leftmost of {w, y} is not right of the leftmost vertex
// of q, then one of w, y is weakly (k + l + |q|)-reachable from the
// other.  Throws PreconditionError when the premises fail.
struct ReachComposition {
  bool w_from_y = false;  // w in WR_{k+l+m}[y]
  bool y_from_w = false;  // y in WR_{k+l+m}[w]
  explicit operator bool() const { return w_from_y || y_from_w; }
};
ReachComposition check_reach_composition(const CoverGraph& g,
                                         const VertexOrder& pi, int w, int x,
                                         int y, int z, int k, int l,
                                         const std::vector<int>& q);

}  // namespace posetlab
