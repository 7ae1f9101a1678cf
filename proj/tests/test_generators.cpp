#include <algorithm>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "posetlab/bounds.hpp"
#include "posetlab/errors.hpp"
#include "posetlab/generators.hpp"
#include "posetlab/io.hpp"
#include "posetlab/reversibility.hpp"

using namespace posetlab;

TEST_CASE("standard example structure") {
  for (int m = 2; m <= 6; ++m) {
    StandardInstance s = gen_standard_example(m);
    CHECK(s.poset.size() == 2 * m);
    CHECK(s.poset.height() == 2);
    CHECK(static_cast<int>(s.poset.cover_relations().size()) == m * (m - 1));
    REQUIRE(static_cast<int>(s.witness.size()) == m);
    CHECK(verify_standard_example(s.poset, s.witness));
    for (int i = 0; i < m; ++i) {
      CHECK(s.poset.label(s.witness[i].x) == "a" + std::to_string(i + 1));
      CHECK(s.poset.label(s.witness[i].y) == "b" + std::to_string(i + 1));
    }
  }
  CHECK_THROWS_AS(gen_standard_example(1), PreconditionError);
}

TEST_CASE("standard example verifier rejects near misses") {
  StandardInstance s = gen_standard_example(3);
  // Wrong pairing: (a_1, b_2) is comparable.
  std::vector<IncPair> wrong = s.witness;
  std::swap(wrong[0].y, wrong[1].y);
  CHECK(!verify_standard_example(s.poset, wrong));
  // Repeated element.
  std::vector<IncPair> dup = s.witness;
  dup[2] = dup[0];
  CHECK(!verify_standard_example(s.poset, dup));
  // Chain poset: no pair qualifies.
  Poset chain = Poset::from_cover_relations(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(!verify_standard_example(chain, {{0, 2}, {1, 3}}));
  // Too few pairs is vacuous-false, not an error.
  CHECK(!verify_standard_example(s.poset, {}));
}

TEST_CASE("subdivided standard example") {
  for (int m = 2; m <= 5; ++m) {
    for (int r = 0; r <= 3; ++r) {
      StandardInstance s = gen_subdivided_standard(m, r);
      CHECK(s.poset.height() == r + 2);
      CHECK(s.poset.size() <= r * m * m + 2 * m);
      CHECK(s.poset.size() == 2 * m + r * m * (m - 1));
      CHECK(verify_standard_example(s.poset, s.witness));
      // Every original cover a_i < b_j is now a chain of r + 1 covers.
      CHECK(static_cast<int>(s.poset.cover_relations().size()) ==
            (r + 1) * m * (m - 1));
    }
  }
  // r = 0 emits the very same text as the standard example.
  CHECK(emit_poset(gen_subdivided_standard(4, 0).poset) ==
        emit_poset(gen_standard_example(4).poset));
  CHECK_THROWS_AS(gen_subdivided_standard(2, -1), PreconditionError);
}

TEST_CASE("subdivision keeps dimension at least m") {
  StandardInstance s = gen_subdivided_standard(3, 1);
  DimResult res = dim_exact(s.poset, 100);
  CHECK(res.dim >= 3);
  // Out-of-budget instances still surface a usable lower bound.
  try {
    dim_exact(gen_subdivided_standard(3, 2).poset, 100);
    FAIL("expected BudgetExceededError");
  } catch (const BudgetExceededError& e) {
    CHECK(e.lower >= 2);
  }
}

TEST_CASE("kelly construction") {
  for (int m = 3; m <= 8; ++m) {
    KellyInstance k = gen_kelly(m);
    CHECK(k.poset.size() == 4 * m - 4);
    CHECK(static_cast<int>(k.poset.cover_relations().size()) == 6 * m - 10);
    CHECK(k.poset.height() == m);
    CHECK(verify_standard_example(k.poset, k.witness));
    REQUIRE(static_cast<int>(k.witness.size()) == m);
    // The diagram is planar and the shipped rotation is a plane embedding.
    CoverGraph g = cover_graph(k.poset);
    CHECK_NOTHROW(check_rotation(g, k.embedding));
    int faces = 0;
    CHECK(euler_check(g, k.embedding, &faces));
    CHECK(g.n - g.edge_count() + faces == 2);
  }
  // m = 2 degenerates to the standard example: two disjoint diagram
  // edges, Euler per component.
  KellyInstance k2 = gen_kelly(2);
  CHECK(k2.poset.size() == 4);
  CoverGraph g2 = cover_graph(k2.poset);
  CHECK(g2.component_count() == 2);
  CHECK(verify_standard_example(k2.poset, k2.witness));
  CHECK(euler_check(g2, k2.embedding));
  CHECK_THROWS_AS(gen_kelly(1), PreconditionError);
}

TEST_CASE("kelly dimension matches the witness order") {
  KellyInstance k = gen_kelly(3);
  DimResult res = dim_exact(k.poset, 100);
  CHECK(res.dim == 3);
}

TEST_CASE("euler check on hand-built embeddings") {
  // Triangle: one rotation, V - E + F = 3 - 3 + 2.
  CoverGraph tri = CoverGraph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}});
  PlanarEmbedding emb{{{1, 2}, {0, 2}, {0, 1}}};
  int faces = 0;
  CHECK(euler_check(tri, emb, &faces));
  CHECK(faces == 2);
  // K4 planar: 4 - 6 + 4 = 2.
  CoverGraph k4 =
      CoverGraph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  PlanarityResult pr = compute_planar_embedding(k4);
  REQUIRE(pr.planar);
  CHECK(euler_check(k4, pr.embedding, &faces));
  CHECK(faces == 4);
  // K5 is not planar.
  std::vector<std::pair<int, int>> k5e;
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) k5e.push_back({u, v});
  CHECK(!compute_planar_embedding(CoverGraph::from_edges(5, k5e)).planar);
  // A rotation that is not a permutation of the neighbors is rejected.
  PlanarEmbedding bad{{{1, 1}, {0, 2}, {0, 1}}};
  CHECK_THROWS_AS(check_rotation(tri, bad), PreconditionError);
}

TEST_CASE("tree decomposition verifier catches tampering") {
  PhtInstance inst = gen_pht(2, 2);
  CoverGraph g = cover_graph(inst.poset);
  TdReport ok = verify_tree_decomposition(g, inst.td);
  REQUIRE(ok.valid);
  CHECK(ok.width == inst.td.width());
  CHECK(ok.problems.empty());

  // Remove one vertex from every bag containing it: coverage breaks.
  TreeDecomposition broken = inst.td;
  for (auto& bag : broken.bags)
    bag.erase(std::remove(bag.begin(), bag.end(), 0), bag.end());
  TdReport r1 = verify_tree_decomposition(g, broken);
  CHECK(!r1.valid);
  CHECK(!r1.problems.empty());

  // Disconnect the tree.
  TreeDecomposition cut = inst.td;
  REQUIRE(!cut.edges.empty());
  cut.edges.pop_back();
  CHECK(!verify_tree_decomposition(g, cut).valid);

  // Duplicate a tree edge.
  TreeDecomposition dup = inst.td;
  dup.edges.push_back(dup.edges.front());
  CHECK(!verify_tree_decomposition(g, dup).valid);
}

TEST_CASE("doubling construction invariants") {
  for (int h = 1; h <= 3; ++h) {
    for (int t = 1; t + h <= 4; ++t) {
      PhtInstance inst = gen_pht(h, t);
      CHECK(inst.h == h);
      CHECK(inst.t == t);
      CHECK(inst.poset.height() == 2 * h);

      // Vertical pairs are min/max, and their bags contain both ends.
      std::vector<int> mins = inst.poset.minimal_elements();
      std::vector<int> maxs = inst.poset.maximal_elements();
      std::set<int> min_set(mins.begin(), mins.end());
      std::set<int> max_set(maxs.begin(), maxs.end());
      CHECK(min_set.size() == inst.vertical_pairs.size());
      CHECK(max_set.size() == inst.vertical_pairs.size());
      for (const VerticalPair& vp : inst.vertical_pairs) {
        CHECK(min_set.count(vp.low) == 1);
        CHECK(max_set.count(vp.high) == 1);
        REQUIRE(vp.bag >= 0);
        REQUIRE(vp.bag < inst.td.node_count());
        const auto& bag = inst.td.bags[vp.bag];
        CHECK(std::count(bag.begin(), bag.end(), vp.low) == 1);
        CHECK(std::count(bag.begin(), bag.end(), vp.high) == 1);
      }

      // Width bound and validity of the shipped decomposition.
      CHECK(inst.td.width() <= 2 * t + 1);
      CHECK(verify_tree_decomposition(cover_graph(inst.poset), inst.td).valid);

      // The min/max elements induce a standard example of the right order.
      BigInt k = binomial_multiplicative(BigInt(h + t - 1), t);
      REQUIRE(k <= 16);
      const int expect = 1 << k.convert_to<int>();
      CHECK(static_cast<int>(inst.vertical_pairs.size()) == expect);
      std::vector<IncPair> pairs;
      for (const VerticalPair& vp : inst.vertical_pairs)
        pairs.push_back(vp.pair());
      CHECK(verify_standard_example(inst.poset, pairs));
    }
  }
}

TEST_CASE("doubling construction size recurrence") {
  auto n_of = [](int h, int t) { return gen_pht(h, t).poset.size(); };
  auto k_of = [](int h, int t) {
    return static_cast<int>(gen_pht(h, t).vertical_pairs.size());
  };
  CHECK(n_of(1, 1) == 4);
  CHECK(n_of(2, 1) == 12);
  CHECK(n_of(3, 1) == 28);
  CHECK(n_of(2, 2) == 28);
  // n(h, t) = n(h-1, t) + k(h-1, t) * n(h, t-1).
  CHECK(n_of(2, 2) == n_of(1, 2) + k_of(1, 2) * n_of(2, 1));
  CHECK(n_of(3, 2) == n_of(2, 2) + k_of(2, 2) * n_of(3, 1));
  CHECK(n_of(2, 3) == n_of(1, 3) + k_of(1, 3) * n_of(2, 2));
}

TEST_CASE("doubling construction rejects bad or oversized input") {
  CHECK_THROWS_AS(gen_pht(0, 1), PreconditionError);
  CHECK_THROWS_AS(gen_pht(1, 0), PreconditionError);
  try {
    gen_pht(4, 4);  // far past the element cap
    FAIL("expected BudgetExceededError");
  } catch (const BudgetExceededError& e) {
    CHECK(e.lower > 20000);
  }
}

TEST_CASE("height and width driven selection") {
  PhtInstance inst = gen_for_height_width(4, 3);
  CHECK(inst.h == 2);
  CHECK(inst.t == 1);
  CHECK(inst.poset.height() <= 4);
  CHECK(inst.td.width() <= 3);
  CHECK_THROWS_AS(gen_for_height_width(3, 3), PreconditionError);
  CHECK_THROWS_AS(gen_for_height_width(4, 2), PreconditionError);
}
