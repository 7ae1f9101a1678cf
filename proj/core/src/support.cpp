#include "posetlab/support.hpp"

#include <algorithm>

#include "posetlab/errors.hpp"
#include "posetlab/reversibility.hpp"

namespace posetlab {

namespace {

void check_pairs(const Poset& p, const std::vector<IncPair>& pairs) {
  for (const IncPair& pr : pairs) {
    if (pr.x < 0 || pr.x >= p.size() || pr.y < 0 || pr.y >= p.size())
      throw IndexError("pair element outside [0, n)");
    if (p.comparable(pr.x, pr.y))
      throw NotIncomparableError("pair (" + std::to_string(pr.x) + ", " +
                                 std::to_string(pr.y) + ") is comparable");
  }
}

}  // namespace

SupportColoring support_coloring(const Poset& p, const VertexOrder& pi) {
  const int h = p.height();
  const int r_color = std::max(0, 4 * h - 4);
  const int r_reach = std::max(0, 2 * h - 2);
  CoverGraph g = cover_graph(p);

  SupportColoring sc;
  sc.phi = greedy_coloring(g, pi, r_color);
  sc.reach = weak_reach(g, pi, r_reach);
  sc.reach_c = wcol_under_order(g, pi, r_color);
  sc.tau.assign(p.size(), -1);
  for (int z = 0; z < p.size(); ++z) {
    Bits down = p.strict_downset(z);
    down.set(z);
    int left = z;
    for (auto u = down.find_first(); u != Bits::npos; u = down.find_next(u))
      if (pi.pos[u] < pi.pos[left]) left = static_cast<int>(u);
    sc.tau[z] = sc.phi.color[left];
  }
  return sc;
}

std::optional<int> witness_of_color(const Poset& p, const SupportColoring& sc,
                                    int z, int i) {
  if (z < 0 || z >= p.size()) throw IndexError("element outside [0, n)");
  int found = -1;
  const Bits& set = sc.reach.sets[z];
  for (auto u = set.find_first(); u != Bits::npos; u = set.find_next(u)) {
    if (sc.phi.color[u] != i) continue;
    if (found != -1)
      throw ColorCollisionError("color " + std::to_string(i) +
                                " duplicated in a reach set");
    found = static_cast<int>(u);
  }
  if (found == -1) return std::nullopt;
  return found;
}

TauSignature tau_signature(const Poset& p, const SupportColoring& sc,
                           const IncPair& pr) {
  const int t = sc.tau[pr.y];
  // The leftmost element below y realizes color t inside y's reach set:
  // the cover chain down to it stays right of it, within radius.
  std::optional<int> wy = witness_of_color(p, sc, pr.y, t);
  if (!wy)
    throw InternalProofViolation("missing witness below the pair's top");
  std::optional<int> wx = witness_of_color(p, sc, pr.x, t);

  TauSignature sig;
  sig.tau = t;
  if (wx && *wx == *wy)
    sig.alpha = 1;
  else if (wx && sc.phi.order.pos[*wx] < sc.phi.order.pos[*wy])
    sig.alpha = 2;
  else
    sig.alpha = 3;
  return sig;
}

TauPartitionResult tau_partition(const Poset& p,
                                 const std::vector<IncPair>& pairs,
                                 const VertexOrder& pi) {
  check_pairs(p, pairs);
  TauPartitionResult res;
  res.order = pi;
  res.coloring = support_coloring(p, pi);
  for (const IncPair& pr : pairs)
    res.classes[tau_signature(p, res.coloring, pr)].push_back(pr);
  for (const auto& [sig, cls] : res.classes) {
    if (sig.alpha == 1) continue;
    if (find_alternating_cycle(p, cls).has_value())
      throw InternalProofViolation(
          "witness-separated class contains an alternating cycle");
  }
  return res;
}

SupportReport find_support_element(const Poset& p,
                                   const std::vector<IncPair>& pairs,
                                   const SupportOptions& opts) {
  const int h = p.height();
  const int radius = std::max(0, 4 * h - 4);
  CoverGraph g = cover_graph(p);

  SupportReport rep;
  rep.radius = radius;
  VertexOrder pi;
  if (!opts.force_heuristic_order && g.n <= opts.wcol_exact_max_n) {
    rep.exact_order = true;
    pi = wcol_exact(g, radius, opts.wcol_exact_max_n).order;
  } else {
    pi = smallest_last_order(g);
  }

  TauPartitionResult tp = tau_partition(p, pairs, pi);
  rep.c = std::max(1, tp.coloring.reach_c);

  // Budget misses downgrade the report to unverified; the thrown lower
  // bound still orders candidate classes sensibly.
  auto dim_of = [&](const std::vector<IncPair>& s) -> int {
    try {
      return dim_exact(p, s, opts.dim_pair_budget).dim;
    } catch (const BudgetExceededError& e) {
      rep.verified = false;
      return e.lower >= 1 ? static_cast<int>(e.lower) : 1;
    }
  };

  rep.dim_all = dim_of(pairs);

  // Largest-dimension class among those whose pairs share a witness.
  const std::vector<IncPair>* best_cls = nullptr;
  int best_dim = 0;
  for (const auto& [sig, cls] : tp.classes) {
    if (sig.alpha != 1) continue;
    const int d = dim_of(cls);
    if (d > best_dim) {
      best_dim = d;
      best_cls = &cls;
    }
  }

  rep.q = p.size() >= 1 ? 0 : -1;
  if (best_cls) {
    std::map<int, std::vector<IncPair>> by_witness;
    for (const IncPair& pr : *best_cls) {
      const int t = tp.coloring.tau[pr.y];
      by_witness[*witness_of_color(p, tp.coloring, pr.y, t)].push_back(pr);
    }
    int best_q_dim = 0;
    for (const auto& [w, cls] : by_witness) {
      const int d = dim_of(cls);
      if (d > best_q_dim) {
        best_q_dim = d;
        rep.q = w;
      }
    }
  }

  for (const IncPair& pr : pairs)
    if (rep.q >= 0 && p.leq(rep.q, pr.y)) rep.restricted.push_back(pr);
  rep.dim_restricted = dim_of(rep.restricted);

  // dim_restricted >= dim_all / c - 2, cleared of the division.
  rep.inequality_holds =
      static_cast<long long>(rep.c) * (rep.dim_restricted + 2) >= rep.dim_all;
  return rep;
}

}  // namespace posetlab
