#include "posetlab/reversibility.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace posetlab {

namespace {

void validate_pairs(const Poset& p, const std::vector<IncPair>& pairs) {
  for (const auto& [x, y] : pairs) {
    if (x < 0 || x >= p.size() || y < 0 || y >= p.size())
      throw IndexError("pair element outside [0, n)");
    if (p.comparable(x, y))
      throw NotIncomparableError("pair (" + std::to_string(x) + ", " +
                                 std::to_string(y) + ") is comparable");
  }
}

// Digraph on pair indices with an arc a -> b iff x_a <= y_b.  A set of
// pairs is reversible iff this digraph restricted to it is acyclic.
std::vector<Bits> pair_arcs(const Poset& p, const std::vector<IncPair>& pairs) {
  const int k = static_cast<int>(pairs.size());
  std::vector<Bits> out(k, Bits(k));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      if (a != b && p.leq(pairs[a].x, pairs[b].y)) out[a].set(b);
  return out;
}

// Directed cycle restricted to `mask`, as a list of pair indices in arc
// order; empty when acyclic.
std::vector<int> cycle_in(const std::vector<Bits>& out, const Bits& mask) {
  const int k = static_cast<int>(out.size());
  std::vector<int> state(k, 0), parent(k, -1);
  for (int root = 0; root < k; ++root) {
    if (!mask.test(root) || state[root] != 0) continue;
    std::vector<int> stack{root};
    state[root] = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      int next = -1;
      for (auto w = out[v].find_first(); w != Bits::npos;
           w = out[v].find_next(w)) {
        if (!mask.test(w)) continue;
        if (state[w] == 0) {
          next = static_cast<int>(w);
          break;
        }
        if (state[w] == 1) {
          std::vector<int> cyc{static_cast<int>(w)};
          for (int u = v; u != static_cast<int>(w); u = parent[u])
            cyc.push_back(u);
          std::reverse(cyc.begin(), cyc.end());
          return cyc;
        }
      }
      if (next == -1) {
        state[v] = 2;
        stack.pop_back();
      } else {
        state[next] = 1;
        parent[next] = v;
        stack.push_back(next);
      }
    }
  }
  return {};
}

}  // namespace

std::optional<AlternatingCycle> find_alternating_cycle(
    const Poset& p, const std::vector<IncPair>& pairs) {
  validate_pairs(p, pairs);
  const int k = static_cast<int>(pairs.size());
  auto out = pair_arcs(p, pairs);
  Bits all(k);
  all.set();
  auto cyc = cycle_in(out, all);
  if (cyc.empty()) return std::nullopt;
  AlternatingCycle ac;
  for (int i : cyc) ac.pairs.push_back(pairs[i]);
  return ac;
}

LinearExtension reversing_extension(const Poset& p,
                                    const std::vector<IncPair>& pairs) {
  validate_pairs(p, pairs);
  const int n = p.size();
  // Element digraph: covers plus one reversed arc per pair.
  std::vector<std::vector<int>> adj(n);
  std::vector<int> indeg(n, 0);
  for (const auto& [lo, hi] : p.cover_relations()) {
    adj[lo].push_back(hi);
    ++indeg[hi];
  }
  for (const auto& [x, y] : pairs) {
    adj[y].push_back(x);
    ++indeg[x];
  }
  // Lexicographically smallest topological order, for determinism.
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) ready.push(v);
  std::vector<int> order;
  order.reserve(n);
  while (!ready.empty()) {
    const int v = ready.top();
    ready.pop();
    order.push_back(v);
    for (int w : adj[v])
      if (--indeg[w] == 0) ready.push(w);
  }
  if (static_cast<int>(order.size()) != n) {
    auto cyc = find_alternating_cycle(p, pairs);
    if (!cyc)
      throw InternalProofViolation(
          "no reversing extension but no alternating cycle either");
    throw NotReversibleError("pair set admits no reversing extension",
                             std::move(*cyc));
  }
  return LinearExtension::from_order(std::move(order));
}

namespace {

// Adding `v` to the class closes a directed cycle iff v is reachable
// from one of its successors inside the class.
bool creates_cycle(const std::vector<Bits>& out, const std::vector<Bits>& in,
                   const Bits& members, int v) {
  Bits visited = out[v];
  visited &= members;
  if (visited.none()) return false;
  Bits frontier = visited;
  while (true) {
    Bits hit = visited;
    hit &= in[v];
    if (hit.any()) return true;
    Bits next(out.size());
    for (auto w = frontier.find_first(); w != Bits::npos;
         w = frontier.find_next(w))
      next |= out[w];
    next &= members;
    next -= visited;
    if (next.none()) return false;
    visited |= next;
    frontier = std::move(next);
  }
}

struct PairContext {
  std::vector<Bits> out, in;
  std::vector<int> by_constraint;  // pair indices, most 2-cycles first
};

PairContext make_context(const Poset& p, const std::vector<IncPair>& pairs) {
  PairContext ctx;
  const int k = static_cast<int>(pairs.size());
  ctx.out = pair_arcs(p, pairs);
  ctx.in.assign(k, Bits(k));
  for (int a = 0; a < k; ++a)
    for (auto b = ctx.out[a].find_first(); b != Bits::npos;
         b = ctx.out[a].find_next(b))
      ctx.in[b].set(a);
  std::vector<int> deg2(k, 0);
  for (int a = 0; a < k; ++a) {
    Bits two = ctx.out[a];
    two &= ctx.in[a];
    deg2[a] = static_cast<int>(two.count());
  }
  ctx.by_constraint.resize(k);
  std::iota(ctx.by_constraint.begin(), ctx.by_constraint.end(), 0);
  std::stable_sort(ctx.by_constraint.begin(), ctx.by_constraint.end(),
                   [&](int a, int b) { return deg2[a] > deg2[b]; });
  return ctx;
}

// Pairwise 2-cycles force distinct classes, so any clique in the
// 2-cycle graph lower-bounds the dimension.
int greedy_two_cycle_clique(const PairContext& ctx) {
  const int k = static_cast<int>(ctx.out.size());
  if (k == 0) return 1;
  Bits cand(k);
  cand.set();
  int size = 0;
  for (int v : ctx.by_constraint) {
    if (!cand.test(v)) continue;
    ++size;
    Bits nb = ctx.out[v];
    nb &= ctx.in[v];
    cand &= nb;
  }
  return std::max(size, 1);
}

std::vector<int> greedy_first_fit(const PairContext& ctx) {
  const int k = static_cast<int>(ctx.out.size());
  std::vector<int> cls(k, -1);
  std::vector<Bits> members;
  for (int v : ctx.by_constraint) {
    int placed = -1;
    for (size_t c = 0; c < members.size(); ++c) {
      if (!creates_cycle(ctx.out, ctx.in, members[c], v)) {
        placed = static_cast<int>(c);
        break;
      }
    }
    if (placed == -1) {
      members.emplace_back(k);
      placed = static_cast<int>(members.size()) - 1;
    }
    members[placed].set(v);
    cls[v] = placed;
  }
  return cls;
}

// Depth-first search for a d-class assignment.  The next pair is always
// one with the fewest compatible classes (dynamic most-constrained),
// and a fresh class may only be opened with the next unused index.
struct DimSearch {
  const PairContext& ctx;
  int k;
  int d;
  std::vector<Bits> members;
  std::vector<int> cls;
  Bits unassigned;

  explicit DimSearch(const PairContext& c, int d_)
      : ctx(c),
        k(static_cast<int>(c.out.size())),
        d(d_),
        cls(k, -1),
        unassigned(k) {
    unassigned.set();
  }

  bool run(int used) {
    if (unassigned.none()) return true;
    int pick = -1, pick_used = used;
    std::vector<int> pick_classes;
    for (int v : ctx.by_constraint) {
      if (!unassigned.test(v)) continue;
      std::vector<int> ok;
      for (int c = 0; c < used; ++c)
        if (!creates_cycle(ctx.out, ctx.in, members[c], v)) ok.push_back(c);
      if (used < d) ok.push_back(used);  // open a new class
      if (ok.empty()) return false;      // dead end
      if (pick == -1 || ok.size() < pick_classes.size()) {
        pick = v;
        pick_classes = std::move(ok);
        if (pick_classes.size() == 1) break;
      }
    }
    for (int c : pick_classes) {
      const bool fresh = c == static_cast<int>(members.size());
      if (fresh) members.emplace_back(k);
      members[c].set(pick);
      cls[pick] = c;
      unassigned.reset(pick);
      if (run(std::max(used, c + 1))) return true;
      unassigned.set(pick);
      cls[pick] = -1;
      members[c].reset(pick);
      if (fresh) members.pop_back();
    }
    return false;
  }
};

ReversiblePartition partition_from_assignment(const std::vector<IncPair>& pairs,
                                              const std::vector<int>& cls,
                                              int d) {
  ReversiblePartition part;
  part.classes.assign(d, {});
  for (size_t i = 0; i < pairs.size(); ++i) part.classes[cls[i]].push_back(pairs[i]);
  return part;
}

}  // namespace

DimResult dim_exact(const Poset& p, const std::vector<IncPair>& pairs,
                    int pair_budget) {
  validate_pairs(p, pairs);
  const int k = static_cast<int>(pairs.size());
  if (k == 0) {
    // Convention: the empty set needs one (empty) class.
    ReversiblePartition part;
    part.classes.emplace_back();
    return {1, std::move(part)};
  }

  PairContext ctx = make_context(p, pairs);
  const int lower = greedy_two_cycle_clique(ctx);
  std::vector<int> greedy = greedy_first_fit(ctx);
  const int upper = 1 + *std::max_element(greedy.begin(), greedy.end());

  if (k > pair_budget)
    throw BudgetExceededError(
        "dimension search budget is " + std::to_string(pair_budget) +
            " pairs, got " + std::to_string(k),
        lower, upper);

  DimResult result;
  if (upper == lower) {
    result = {upper, partition_from_assignment(pairs, greedy, upper)};
  } else {
    result.dim = -1;
    for (int d = lower; d <= upper; ++d) {
      if (d == upper) {
        result = {upper, partition_from_assignment(pairs, greedy, upper)};
        break;
      }
      DimSearch search(ctx, d);
      if (search.run(0)) {
        result = {d, partition_from_assignment(pairs, search.cls, d)};
        break;
      }
    }
  }

  // Certificates are cheap to re-check, so always do it.
  if (!std::all_of(result.partition.classes.begin(),
                   result.partition.classes.end(),
                   [&](const std::vector<IncPair>& cls) {
                     return !find_alternating_cycle(p, cls).has_value();
                   }))
    throw InternalProofViolation("dimension certificate failed re-check");
  size_t total = 0;
  for (const auto& cls : result.partition.classes) total += cls.size();
  if (total != pairs.size() || result.dim != result.partition.size())
    throw InternalProofViolation("dimension certificate shape mismatch");
  return result;
}

DimResult dim_exact(const Poset& p, int pair_budget) {
  return dim_exact(p, p.incomparable_pairs(), pair_budget);
}

namespace {

// All linear extensions by repeated minimal-element choice.
void enumerate_extensions(const Poset& p,
                          std::vector<std::vector<int>>& out,
                          std::vector<int>& prefix, std::vector<int>& indeg,
                          size_t limit) {
  const int n = p.size();
  if (static_cast<int>(prefix.size()) == n) {
    out.push_back(prefix);
    if (out.size() > limit)
      throw SizeLimitError("too many linear extensions for the oracle");
    return;
  }
  for (int v = 0; v < n; ++v) {
    if (indeg[v] != 0) continue;
    indeg[v] = -1;
    for (const auto& [lo, hi] : p.cover_relations())
      if (lo == v) --indeg[hi];
    prefix.push_back(v);
    enumerate_extensions(p, out, prefix, indeg, limit);
    prefix.pop_back();
    for (const auto& [lo, hi] : p.cover_relations())
      if (lo == v) ++indeg[hi];
    indeg[v] = 0;
  }
}

}  // namespace

int brute_force_dim_oracle(const Poset& p, int max_inc) {
  const auto inc = p.incomparable_pairs();
  const int u = static_cast<int>(inc.size());
  if (u > max_inc)
    throw SizeLimitError("oracle limited to " + std::to_string(max_inc) +
                         " incomparable pairs, got " + std::to_string(u));
  if (u == 0) return 1;

  std::map<std::pair<int, int>, int> bit_of;
  for (int i = 0; i < u; ++i) bit_of[{inc[i].x, inc[i].y}] = i;

  std::vector<std::vector<int>> exts;
  std::vector<int> prefix, indeg(p.size(), 0);
  for (const auto& [lo, hi] : p.cover_relations()) ++indeg[hi];
  enumerate_extensions(p, exts, prefix, indeg, 1u << 20);

  // Reversal mask of each extension, deduplicated.
  std::set<std::uint32_t> mask_set;
  for (const auto& ext : exts) {
    std::vector<int> pos(p.size());
    for (size_t i = 0; i < ext.size(); ++i) pos[ext[i]] = static_cast<int>(i);
    std::uint32_t mask = 0;
    for (int i = 0; i < u; ++i)
      if (pos[inc[i].y] < pos[inc[i].x]) mask |= 1u << i;
    mask_set.insert(mask);
  }
  std::vector<std::uint32_t> masks(mask_set.begin(), mask_set.end());

  // Exact minimum set cover over the 2^u universe, branching on the
  // lowest uncovered pair.
  const std::uint32_t full = u == 32 ? ~0u : (1u << u) - 1;
  std::vector<int> memo(full + 1, -1);
  memo[0] = 0;
  auto solve = [&](auto&& self, std::uint32_t need) -> int {
    if (memo[need] >= 0) return memo[need];
    const std::uint32_t low = need & (~need + 1);
    int best = u + 1;
    for (std::uint32_t m : masks)
      if (m & low) best = std::min(best, 1 + self(self, need & ~m));
    memo[need] = best;
    return best;
  };
  return solve(solve, full);
}

bool verify_realizer(const Poset& p, const Realizer& r) {
  if (r.extensions.empty()) return p.incomparable_pairs().empty() && p.size() >= 0;
  for (const auto& ext : r.extensions)
    if (!p.is_linear_extension(ext)) return false;
  for (const auto& [x, y] : p.incomparable_pairs()) {
    bool reversed = false;
    for (const auto& ext : r.extensions)
      if (ext.before(y, x)) {
        reversed = true;
        break;
      }
    if (!reversed) return false;
  }
  return true;
}

Realizer partition_to_realizer(const Poset& p, const ReversiblePartition& pi) {
  Realizer r;
  for (const auto& cls : pi.classes)
    r.extensions.push_back(reversing_extension(p, cls));
  return r;
}

bool is_partition_of_incomparables(const Poset& p,
                                   const ReversiblePartition& pi) {
  std::set<std::pair<int, int>> seen;
  size_t total = 0;
  for (const auto& cls : pi.classes) {
    for (const auto& [x, y] : cls) {
      if (x < 0 || x >= p.size() || y < 0 || y >= p.size()) return false;
      if (p.comparable(x, y)) return false;
      if (!seen.insert({x, y}).second) return false;
      ++total;
    }
  }
  return total == p.incomparable_pairs().size();
}

}  // namespace posetlab
