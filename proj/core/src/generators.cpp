#include "posetlab/generators.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "posetlab/errors.hpp"

namespace posetlab {

int TreeDecomposition::width() const {
  int w = -1;
  for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
  return w;
}

TdReport verify_tree_decomposition(const CoverGraph& g,
                                   const TreeDecomposition& td) {
  TdReport rep;
  rep.width = td.width();
  auto flag = [&](std::string msg) { rep.problems.push_back(std::move(msg)); };

  const int nb = td.node_count();
  std::vector<std::set<int>> bag(nb);
  for (int i = 0; i < nb; ++i) {
    for (int v : td.bags[i]) {
      if (v < 0 || v >= g.n) {
        flag("bag " + std::to_string(i) + " lists vertex " + std::to_string(v) +
             " outside [0, n)");
        continue;
      }
      if (!bag[i].insert(v).second)
        flag("bag " + std::to_string(i) + " lists vertex " + std::to_string(v) +
             " twice");
    }
  }

  std::vector<std::vector<int>> tadj(nb);
  bool edges_ok = true;
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : td.edges) {
    if (u < 0 || u >= nb || v < 0 || v >= nb || u == v) {
      flag("tree edge (" + std::to_string(u) + ", " + std::to_string(v) +
           ") is not a valid bag pair");
      edges_ok = false;
      continue;
    }
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second) {
      flag("tree edge (" + std::to_string(u) + ", " + std::to_string(v) +
           ") repeated");
      edges_ok = false;
      continue;
    }
    tadj[u].push_back(v);
    tadj[v].push_back(u);
  }
  if (edges_ok && nb > 0) {
    if (static_cast<int>(seen.size()) != nb - 1) {
      flag("bag graph has " + std::to_string(seen.size()) + " edges, a tree on " +
           std::to_string(nb) + " bags needs " + std::to_string(nb - 1));
      edges_ok = false;
    } else {
      std::vector<char> vis(nb, 0);
      std::queue<int> q;
      q.push(0);
      vis[0] = 1;
      int reached = 1;
      while (!q.empty()) {
        const int x = q.front();
        q.pop();
        for (int y : tadj[x])
          if (!vis[y]) {
            vis[y] = 1;
            ++reached;
            q.push(y);
          }
      }
      if (reached != nb) {
        flag("bag graph is disconnected");
        edges_ok = false;
      }
    }
  }
  if (nb == 0 && g.n > 0) flag("no bags for a nonempty graph");

  std::vector<std::vector<int>> holders(g.n);
  for (int i = 0; i < nb; ++i)
    for (int v : bag[i]) holders[v].push_back(i);
  for (int v = 0; v < g.n; ++v)
    if (holders[v].empty())
      flag("vertex " + std::to_string(v) + " is in no bag");

  for (const auto& [u, v] : g.edges) {
    bool covered = false;
    for (int i : holders[u])
      if (bag[i].count(v)) {
        covered = true;
        break;
      }
    if (!covered)
      flag("edge (" + std::to_string(u) + ", " + std::to_string(v) +
           ") is inside no bag");
  }

  if (edges_ok) {
    for (int v = 0; v < g.n; ++v) {
      if (holders[v].size() <= 1) continue;
      std::set<int> mine(holders[v].begin(), holders[v].end());
      std::queue<int> q;
      q.push(holders[v][0]);
      std::set<int> vis{holders[v][0]};
      while (!q.empty()) {
        const int x = q.front();
        q.pop();
        for (int y : tadj[x])
          if (mine.count(y) && !vis.count(y)) {
            vis.insert(y);
            q.push(y);
          }
      }
      if (vis.size() != mine.size())
        flag("bags of vertex " + std::to_string(v) + " do not induce a subtree");
    }
  }

  rep.valid = rep.problems.empty();
  return rep;
}

void check_rotation(const CoverGraph& g, const PlanarEmbedding& emb) {
  if (static_cast<int>(emb.rotation.size()) != g.n)
    throw PreconditionError("rotation system size differs from vertex count");
  for (int v = 0; v < g.n; ++v) {
    std::vector<int> a = g.adj[v];
    std::vector<int> b = emb.rotation[v];
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b)
      throw PreconditionError("rotation at vertex " + std::to_string(v) +
                              " is not a permutation of its neighbors");
  }
}

int count_faces(const CoverGraph& g, const PlanarEmbedding& emb) {
  check_rotation(g, emb);
  int faces = 0;
  for (int v = 0; v < g.n; ++v)
    if (g.adj[v].empty()) ++faces;
  if (g.edge_count() == 0) return faces;

  // Dart (u, v); the face continues with the successor of u in the
  // rotation at v.
  std::map<std::pair<int, int>, int> id;
  std::vector<std::pair<int, int>> darts;
  for (const auto& [u, v] : g.edges) {
    id[{u, v}] = static_cast<int>(darts.size());
    darts.push_back({u, v});
    id[{v, u}] = static_cast<int>(darts.size());
    darts.push_back({v, u});
  }
  std::vector<char> used(darts.size(), 0);
  for (size_t s = 0; s < darts.size(); ++s) {
    if (used[s]) continue;
    ++faces;
    size_t d = s;
    while (!used[d]) {
      used[d] = 1;
      const auto [u, v] = darts[d];
      const auto& rot = emb.rotation[v];
      size_t i = 0;
      while (rot[i] != u) ++i;
      d = id[{v, rot[(i + 1) % rot.size()]}];
    }
  }
  return faces;
}

bool euler_check(const CoverGraph& g, const PlanarEmbedding& emb,
                 int* faces_out) {
  const int f = count_faces(g, emb);
  if (faces_out) *faces_out = f;
  return g.n >= 1 &&
         g.n - g.edge_count() + f == 2 * g.component_count();
}

StandardInstance gen_standard_example(int m) {
  if (m < 2) throw PreconditionError("standard example needs m >= 2");
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j) covers.push_back({i, m + j});
  StandardInstance inst{Poset::from_cover_relations(2 * m, covers), {}};
  for (int i = 0; i < m; ++i) {
    inst.poset.set_label(i, "a" + std::to_string(i + 1));
    inst.poset.set_label(m + i, "b" + std::to_string(i + 1));
    inst.witness.push_back({i, m + i});
  }
  return inst;
}

StandardInstance gen_subdivided_standard(int m, int r) {
  if (m < 2) throw PreconditionError("standard example needs m >= 2");
  if (r < 0) throw PreconditionError("subdivision count must be >= 0");
  if (r == 0) return gen_standard_example(m);

  std::vector<std::pair<int, int>> covers;
  std::vector<std::string> labels(2 * m);
  for (int i = 0; i < m; ++i) {
    labels[i] = "a" + std::to_string(i + 1);
    labels[m + i] = "b" + std::to_string(i + 1);
  }
  int next = 2 * m;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      int prev = i;
      for (int k = 1; k <= r; ++k) {
        labels.push_back("a" + std::to_string(i + 1) + "b" +
                         std::to_string(j + 1) + "." + std::to_string(k));
        covers.push_back({prev, next});
        prev = next++;
      }
      covers.push_back({prev, m + j});
    }

  StandardInstance inst{Poset::from_cover_relations(next, covers), {}};
  for (int v = 0; v < next; ++v) inst.poset.set_label(v, labels[v]);
  for (int i = 0; i < m; ++i) inst.witness.push_back({i, m + i});
  return inst;
}

KellyInstance gen_kelly(int m) {
  if (m < 2) throw PreconditionError("construction needs m >= 2");
  // Ids: a_i = i-1, b_i = m+i-1, s_i = 2m+i-2, t_i = 3m+i-4.
  const auto a = [](int i) { return i - 1; };
  const auto b = [m](int i) { return m + i - 1; };
  const auto s = [m](int i) { return 2 * m + i - 2; };
  const auto t = [m](int i) { return 3 * m + i - 4; };
  const int n = m == 2 ? 4 : 4 * m - 4;

  std::vector<std::pair<int, int>> covers;
  covers.push_back({a(1), b(2)});
  covers.push_back({a(2), b(1)});
  if (m >= 3) {
    covers.push_back({a(1), s(2)});
    covers.push_back({a(2), s(2)});
    covers.push_back({t(2), b(1)});
    covers.push_back({t(2), b(2)});
    for (int i = 3; i <= m - 1; ++i) {
      covers.push_back({a(i), s(i)});
      covers.push_back({s(i - 1), s(i)});
      covers.push_back({t(i), b(i)});
      covers.push_back({t(i), t(i - 1)});
    }
    // The connector entries and exits nest: a_i dips to t_{i-1},
    // one level further down the distributor chain than b_i's exit
    // t_i, so consecutive connector paths never interleave.
    for (int i = 3; i <= m; ++i) {
      covers.push_back({a(i), t(i - 1)});
      covers.push_back({s(i - 1), b(i)});
    }
  }

  KellyInstance inst{Poset::from_cover_relations(n, covers), {}, {}};
  for (int i = 1; i <= m; ++i) {
    inst.poset.set_label(a(i), "a" + std::to_string(i));
    inst.poset.set_label(b(i), "b" + std::to_string(i));
    inst.witness.push_back({a(i), b(i)});
  }
  for (int i = 2; i <= m - 1; ++i) {
    inst.poset.set_label(s(i), "s" + std::to_string(i));
    inst.poset.set_label(t(i), "t" + std::to_string(i));
  }

  PlanarityResult pr = compute_planar_embedding(cover_graph(inst.poset));
  if (!pr.planar)
    throw InternalProofViolation("nested-chain diagram must be planar");
  inst.embedding = pr.embedding;
  return inst;
}

namespace {

struct PhtParts {
  int n = 0;
  std::vector<std::pair<int, int>> covers;
  std::vector<VerticalPair> vpairs;
  std::vector<std::vector<int>> bags;
  std::vector<std::pair<int, int>> tree_edges;
};

// Four fresh elements forming a 2-dimensional standard example; the
// recursion hangs them below/above a vertical pair.
PhtParts pht_base() {
  PhtParts s;
  s.n = 4;
  s.covers = {{0, 3}, {1, 2}};
  s.bags = {{0, 1, 2, 3}};
  s.vpairs = {{0, 2, 0}, {1, 3, 0}};
  return s;
}

PhtParts pht_build(int h, int t) {
  if (h == 1) return pht_base();
  PhtParts s = pht_build(h - 1, t);
  // Width bound 2t+1 forbids blanket {a, b} bag augmentation at t = 1,
  // so that level uses the three fixed 4-element bags instead.
  const PhtParts sub = t >= 2 ? pht_build(h, t - 1) : PhtParts{};
  std::vector<VerticalPair> fresh;

  for (const VerticalPair& vp : s.vpairs) {
    const int a = vp.low, b = vp.high;
    if (t == 1) {
      const int x1 = s.n, x2 = s.n + 1, y1 = s.n + 2, y2 = s.n + 3;
      s.n += 4;
      s.covers.push_back({x1, a});
      s.covers.push_back({x2, a});
      s.covers.push_back({b, y1});
      s.covers.push_back({b, y2});
      s.covers.push_back({x1, y2});
      s.covers.push_back({x2, y1});
      const int b1 = static_cast<int>(s.bags.size());
      s.bags.push_back({a, b, y1, y2});
      s.bags.push_back({a, x1, y1, y2});
      s.bags.push_back({a, x2, y1, y2});
      s.tree_edges.push_back({vp.bag, b1});
      s.tree_edges.push_back({b1, b1 + 1});
      s.tree_edges.push_back({b1, b1 + 2});
      fresh.push_back({x1, y1, b1 + 1});
      fresh.push_back({x2, y2, b1 + 2});
    } else {
      const int off = s.n;
      s.n += sub.n;
      for (auto [lo, hi] : sub.covers) s.covers.push_back({off + lo, off + hi});
      // Copy minimals slide under a, copy maximals over b; a and b join
      // every copied bag, so the copy's tree can attach anywhere.
      const int bag_off = static_cast<int>(s.bags.size());
      for (const auto& bg : sub.bags) {
        std::vector<int> nb{a, b};
        for (int v : bg) nb.push_back(off + v);
        std::sort(nb.begin(), nb.end());
        s.bags.push_back(std::move(nb));
      }
      for (auto [u, v] : sub.tree_edges)
        s.tree_edges.push_back({bag_off + u, bag_off + v});
      s.tree_edges.push_back({vp.bag, bag_off});
      for (const VerticalPair& svp : sub.vpairs) {
        s.covers.push_back({off + svp.low, a});
        s.covers.push_back({b, off + svp.high});
        fresh.push_back({off + svp.low, off + svp.high, bag_off + svp.bag});
      }
    }
  }
  s.vpairs = std::move(fresh);
  return s;
}

// Element count of the doubling recursion, saturated above `cap`.
long long pht_size_estimate(int h, int t, long long cap) {
  if (h == 1) return 4;
  if (h > 30 || t > 30) return cap + 1;
  std::vector<std::vector<long long>> est(
      h + 1, std::vector<long long>(t + 1, 4));
  for (int hh = 2; hh <= h; ++hh)
    for (int tt = 1; tt <= t; ++tt) {
      const long long base = est[hh - 1][tt];
      const long long sub = tt >= 2 ? est[hh][tt - 1] : 4;
      if (base > cap || sub > cap) {
        est[hh][tt] = cap + 1;
        continue;
      }
      // Pair count of the (hh-1, tt) stage: 2^binom(hh+tt-2, tt).
      long long e = 1;
      for (int i = 1; i <= tt && e <= 60; ++i) e = e * (hh - 2 + i) / i;
      if (e > 40) {
        est[hh][tt] = cap + 1;
        continue;
      }
      const long long k = 1LL << e;
      est[hh][tt] = k > (cap - base) / sub ? cap + 1 : base + k * sub;
    }
  return est[h][t];
}

constexpr long long kPhtElementCap = 20000;

}  // namespace

PhtInstance gen_pht(int h, int t) {
  if (h < 1 || t < 1) throw PreconditionError("doubling construction needs h >= 1, t >= 1");
  const long long est = pht_size_estimate(h, t, kPhtElementCap);
  if (est > kPhtElementCap)
    throw BudgetExceededError(
        "construction would exceed " + std::to_string(kPhtElementCap) +
            " elements",
        est, -1);

  PhtParts s = pht_build(h, t);
  PhtInstance inst{Poset::from_cover_relations(s.n, s.covers), {}, {}, h, t};
  inst.vertical_pairs = std::move(s.vpairs);
  inst.td.bags = std::move(s.bags);
  inst.td.edges = std::move(s.tree_edges);
  return inst;
}

PhtInstance gen_for_height_width(int h, int t) {
  if (h < 4 || t < 3)
    throw PreconditionError("height/width reduction needs h >= 4, t >= 3");
  return gen_pht(h / 2, (t - 1) / 2);
}

}  // namespace posetlab
