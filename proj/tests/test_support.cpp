#include <algorithm>
#include <map>

#include "doctest.h"
#include "posetlab/errors.hpp"
#include "posetlab/generators.hpp"
#include "posetlab/reversibility.hpp"
#include "posetlab/sampler.hpp"
#include "posetlab/support.hpp"
#include "posetlab/wcol.hpp"

using namespace posetlab;

namespace {

VertexOrder order_for(const Poset& p, Rng& rng) {
  return VertexOrder::from_order(sample_permutation(rng, p.size()));
}

}  // namespace

TEST_CASE("tau colors come from the coloring and witnesses are unique") {
  Rng rng(601);
  for (int trial = 0; trial < 20; ++trial) {
    Poset p = sample_random_poset(rng, 3 + static_cast<int>(rand_below(rng, 9)),
                                  3, 0.4);
    VertexOrder pi = order_for(p, rng);
    SupportColoring sc = support_coloring(p, pi);
    CHECK(sc.phi.radius == std::max(0, 4 * p.height() - 4));
    CHECK(sc.reach.radius == std::max(0, 2 * p.height() - 2));
    for (int z = 0; z < p.size(); ++z) {
      CHECK(sc.tau[z] >= 0);
      CHECK(sc.tau[z] < std::max(sc.phi.palette, 1));
      // tau is the color of the leftmost element of the closed down-set.
      int best = z;
      for (int v = 0; v < p.size(); ++v)
        if (p.less(v, z) && pi.pos[v] < pi.pos[best]) best = v;
      CHECK(sc.tau[z] == sc.phi.color[best]);
      // witness_of_color scans without ever hitting a collision.
      for (int i = 0; i < sc.phi.palette; ++i)
        CHECK_NOTHROW(witness_of_color(p, sc, z, i));
    }
  }
}

TEST_CASE("comparable pairs share the tau witness of the top element") {
  // The keystone of the decomposition: whenever x <= y, the color-tau(y)
  // witness of x exists and equals the one of y.
  Rng rng(602);
  for (int trial = 0; trial < 25; ++trial) {
    Poset p = sample_random_poset(rng, 3 + static_cast<int>(rand_below(rng, 9)),
                                  4, 0.4);
    VertexOrder pi = order_for(p, rng);
    SupportColoring sc = support_coloring(p, pi);
    for (int x = 0; x < p.size(); ++x) {
      for (int y = 0; y < p.size(); ++y) {
        if (!p.leq(x, y)) continue;
        auto wx = witness_of_color(p, sc, x, sc.tau[y]);
        auto wy = witness_of_color(p, sc, y, sc.tau[y]);
        REQUIRE(wx.has_value());
        REQUIRE(wy.has_value());
        CHECK(*wx == *wy);
      }
    }
  }
}

TEST_CASE("tau partition classes with alpha 2 or 3 are reversible") {
  Rng rng(603);
  for (int trial = 0; trial < 20; ++trial) {
    Poset p = sample_random_poset(rng, 4 + static_cast<int>(rand_below(rng, 8)),
                                  3, 0.4);
    VertexOrder pi = order_for(p, rng);
    std::vector<IncPair> pairs = p.incomparable_pairs();
    TauPartitionResult res = tau_partition(p, pairs, pi);
    size_t total = 0;
    for (const auto& [sig, cls] : res.classes) {
      total += cls.size();
      CHECK(sig.alpha >= 1);
      CHECK(sig.alpha <= 3);
      if (sig.alpha != 1)
        CHECK(!find_alternating_cycle(p, cls).has_value());
      for (const IncPair& pr : cls)
        CHECK(tau_signature(p, res.coloring, pr) == sig);
    }
    CHECK(total == pairs.size());
  }
}

TEST_CASE("support element reports a valid restriction") {
  Rng rng(604);
  int verified_runs = 0;
  for (int trial = 0; trial < 15; ++trial) {
    Poset p = sample_poset_with_bounded_inc(6040 + trial, 10, 2, 0.45, 40);
    std::vector<IncPair> pairs = p.incomparable_pairs();
    if (pairs.empty()) continue;
    SupportReport rep = find_support_element(p, pairs);
    REQUIRE(rep.q >= 0);
    REQUIRE(rep.q < p.size());
    // Restriction is exactly the pairs whose top is above q.
    std::vector<IncPair> expect;
    for (const IncPair& pr : pairs)
      if (p.leq(rep.q, pr.y)) expect.push_back(pr);
    CHECK(rep.restricted == expect);
    CHECK(rep.c >= 1);
    if (!rep.verified) continue;
    ++verified_runs;
    CHECK(rep.dim_all == dim_exact(p, pairs).dim);
    if (!rep.restricted.empty())
      CHECK(rep.dim_restricted == dim_exact(p, rep.restricted).dim);
    // dim <= c * (dim of restriction + 2), checked in integers.
    CHECK(rep.inequality_holds);
    CHECK(static_cast<long long>(rep.c) * (rep.dim_restricted + 2) >=
          rep.dim_all);
  }
  CHECK(verified_runs >= 10);
}

TEST_CASE("support element on a standard example") {
  StandardInstance s = gen_standard_example(3);
  SupportReport rep = find_support_element(s.poset, s.poset.incomparable_pairs());
  CHECK(rep.verified);
  CHECK(rep.inequality_holds);
  CHECK(rep.dim_all == 3);
  CHECK(rep.radius == std::max(0, 4 * s.poset.height() - 4));
}

TEST_CASE("budget pressure degrades to unverified bounds") {
  StandardInstance s = gen_standard_example(4);  // |Inc| = 28
  SupportOptions opts;
  opts.dim_pair_budget = 4;
  SupportReport rep = find_support_element(s.poset,
                                           s.poset.incomparable_pairs(), opts);
  CHECK(!rep.verified);
  CHECK(rep.dim_all >= 1);
  CHECK(rep.q >= 0);
}

TEST_CASE("pair validation") {
  StandardInstance s = gen_standard_example(2);
  std::vector<IncPair> bad = {{0, 3}};  // comparable
  CHECK_THROWS_AS(find_support_element(s.poset, bad), NotIncomparableError);
  std::vector<IncPair> oob = {{0, 99}};
  CHECK_THROWS_AS(find_support_element(s.poset, oob), IndexError);
}
