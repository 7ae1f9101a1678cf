#include "posetlab/signatures.hpp"

#include <algorithm>

#include "posetlab/errors.hpp"

namespace posetlab {

GreedyColoring greedy_coloring(const CoverGraph& g, const VertexOrder& pi,
                               int radius) {
  ReachProfile prof = weak_reach(g, pi, radius);
  const int n = g.n;
  GreedyColoring out;
  out.radius = radius;
  out.order = pi;
  out.color.assign(n, -1);
  std::vector<char> used(n + 1, 0);
  for (int i = 0; i < n; ++i) {
    const int x = pi.order[i];
    // Everything weakly reachable from x is at or left of x, hence
    // already colored.
    std::vector<int> marked;
    for (auto u = prof.sets[x].find_first(); u != Bits::npos;
         u = prof.sets[x].find_next(u)) {
      if (static_cast<int>(u) == x) continue;
      const int c = out.color[u];
      used[c] = 1;
      marked.push_back(c);
    }
    int c = 0;
    while (used[c]) ++c;
    out.color[x] = c;
    out.palette = std::max(out.palette, c + 1);
    for (int m : marked) used[m] = 0;
  }
  return out;
}

namespace {

// Bottom-up widest-path value: best[v] = the largest achievable minimum
// position over cover chains from x up (down) to v.  v belongs to the
// weak up-set (down-set) iff best[v] equals v's own position, i.e. some
// chain has v as its leftmost vertex.
void widest_chain_mark(const Poset& p, const VertexOrder& pi, int x, bool upward,
                       Bits& out) {
  const int n = p.size();
  std::vector<int> best(n, -1);
  best[x] = pi.pos[x];
  out.set(x);

  // Elements sorted by level give a topological order of the diagram.
  std::vector<int> topo(n);
  for (int v = 0; v < n; ++v) topo[v] = v;
  std::stable_sort(topo.begin(), topo.end(), [&](int a, int b) {
    return upward ? p.level(a) < p.level(b) : p.level(a) > p.level(b);
  });
  // Cover arcs in traversal direction.
  std::vector<std::vector<int>> pred(n);
  for (const auto& [lo, hi] : p.cover_relations()) {
    if (upward)
      pred[hi].push_back(lo);
    else
      pred[lo].push_back(hi);
  }
  for (int v : topo) {
    if (v == x) continue;
    int b = -1;
    for (int u : pred[v])
      if (best[u] >= 0) b = std::max(b, std::min(best[u], pi.pos[v]));
    best[v] = b;
    if (b == pi.pos[v]) out.set(v);
  }
}

}  // namespace

WeakSets weak_up_down(const Poset& p, const VertexOrder& pi, int x) {
  if (x < 0 || x >= p.size()) throw IndexError("element outside [0, n)");
  WeakSets ws{Bits(p.size()), Bits(p.size())};
  widest_chain_mark(p, pi, x, true, ws.up);
  widest_chain_mark(p, pi, x, false, ws.down);
  return ws;
}

bool PairSignature::operator<(const PairSignature& o) const {
  if (a != o.a) return a < o.a;
  if (b != o.b) return b < o.b;
  return c < o.c;
}

namespace {

// Witness per color in a weak set; `strict` escalates duplicated colors
// (impossible at the guaranteed radius) instead of keeping the leftmost.
std::vector<int> color_witnesses(const VertexOrder& pi,
                                 const GreedyColoring& phi, const Bits& set,
                                 int palette, bool strict) {
  std::vector<int> w(palette, -1);
  for (auto u = set.find_first(); u != Bits::npos; u = set.find_next(u)) {
    const int c = phi.color[u];
    if (w[c] == -1) {
      w[c] = static_cast<int>(u);
    } else if (strict) {
      throw ColorCollisionError("color " + std::to_string(c) +
                                " duplicated inside a weak set");
    } else if (pi.pos[u] < pi.pos[w[c]]) {
      w[c] = static_cast<int>(u);
    }
  }
  return w;
}

PairSignature signature_impl(const Poset& p, const VertexOrder& pi,
                             const GreedyColoring& phi, const IncPair& pr,
                             bool strict) {
  WeakSets wx = weak_up_down(p, pi, pr.x);
  WeakSets wy = weak_up_down(p, pi, pr.y);
  const int palette = std::max(phi.palette, 1);
  auto wu = color_witnesses(pi, phi, wx.up, palette, strict);
  auto wd = color_witnesses(pi, phi, wy.down, palette, strict);

  PairSignature sig{Bits(palette), Bits(palette), Bits(palette)};
  for (int c = 0; c < palette; ++c) {
    if (wu[c] == -1) continue;
    sig.a.set(c);
    if (wd[c] == -1) continue;
    sig.b.set(c);
    if (pi.pos[wu[c]] < pi.pos[wd[c]]) sig.c.set(c);
  }
  return sig;
}

}  // namespace

PairSignature pair_signature(const Poset& p, const VertexOrder& pi,
                             const GreedyColoring& phi, const IncPair& pr) {
  return signature_impl(p, pi, phi, pr, true);
}

SignaturePartitionResult signature_partition(
    const Poset& p, const SignaturePartitionOptions& opts) {
  const int h = p.height();
  const bool overridden = opts.radius_override >= 0;
  const int radius = overridden ? opts.radius_override : std::max(0, 3 * h - 3);
  CoverGraph g = cover_graph(p);

  SignaturePartitionResult res;
  res.radius = radius;
  if (!opts.force_heuristic_order && g.n <= opts.wcol_exact_max_n) {
    res.exact_order = true;
    res.coloring = greedy_coloring(g, wcol_exact(g, radius, opts.wcol_exact_max_n).order,
                                   radius);
  } else {
    res.coloring = greedy_coloring(g, smallest_last_order(g), radius);
  }
  const VertexOrder& pi = res.coloring.order;
  res.reach_c = wcol_under_order(g, pi, radius);

  std::map<PairSignature, std::vector<IncPair>> by_sig;
  for (const IncPair& pr : p.incomparable_pairs())
    by_sig[signature_impl(p, pi, res.coloring, pr, !overridden)].push_back(pr);

  for (auto& [sig, cls] : by_sig) {
    if (find_alternating_cycle(p, cls).has_value()) {
      if (!overridden)
        throw InternalProofViolation(
            "signature class not reversible at the guaranteed radius");
      res.all_reversible = false;
    }
    res.signatures.push_back(sig);
    res.partition.classes.push_back(std::move(cls));
  }
  return res;
}

}  // namespace posetlab
