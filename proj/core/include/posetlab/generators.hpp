#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "posetlab/poset.hpp"

namespace posetlab {

struct TreeDecomposition {
  std::vector<std::vector<int>> bags;      // sorted vertex lists
  std::vector<std::pair<int, int>> edges;  // tree edges on bag indices
  int node_count() const { return static_cast<int>(bags.size()); }
  int width() const;  // max bag size - 1; -1 when empty
};

struct TdReport {
  bool valid = false;
  int width = -1;
  std::vector<std::string> problems;  // empty iff valid
};

// Checks tree-ness, vertex coverage, edge coverage and per-vertex bag
// connectivity.  Violations are reported, not thrown.
TdReport verify_tree_decomposition(const CoverGraph& g,
                                   const TreeDecomposition& td);

// Rotation system: rotation[v] lists the neighbors of v in cyclic order.
struct PlanarEmbedding {
  std::vector<std::vector<int>> rotation;
};

// PreconditionError unless every rotation[v] is a permutation of the
// neighbors of v.
void check_rotation(const CoverGraph& g, const PlanarEmbedding& emb);

// Faces of a rotation system by dart traversal; an isolated vertex
// counts as one trivial face.  A rotation system is a plane embedding
// iff V - E + F == 2C (C = connected components), the classical
// V - E + F == 2 when connected.
int count_faces(const CoverGraph& g, const PlanarEmbedding& emb);
bool euler_check(const CoverGraph& g, const PlanarEmbedding& emb,
                 int* faces_out = nullptr);

// Boyer-Myrvold; nullopt for non-planar input.
struct PlanarityResult {
  bool planar = false;
  PlanarEmbedding embedding;
};
PlanarityResult compute_planar_embedding(const CoverGraph& g);

// Standard example: minimal a_1..a_m, maximal b_1..b_m, a_i < b_j iff
// i != j.  Ids: a_i = i-1, b_i = m+i-1; labels a1..am, b1..bm.
struct StandardInstance {
  Poset poset;
  std::vector<IncPair> witness;  // (a_i, b_i)
};
StandardInstance gen_standard_example(int m);

// Standard example with every diagram edge subdivided exactly r times;
// r = 0 gives the standard example itself.  Height r + 2 (for m >= 2)
// and at most r*m^2 + 2m elements; the original 2m elements still
// induce the standard example.
StandardInstance gen_subdivided_standard(int m, int r);

// Planar-diagram poset containing an induced standard example.  m = 2
// is the standard example itself (two disjoint diagram edges).  For
// m >= 3 two connector chains carry the comparabilities: a collector
// chain s_2 < .. < s_{m-1} with a_1, a_2 below s_2, a_i below s_i and
// s_{i-1} below b_i, and a distributor chain t_{m-1} < .. < t_2 with
// b_1, b_2 above t_2, t_i below b_i and a_i above t_{i-1}; the base
// covers a_1 < b_2, a_2 < b_1 close S_m.  So a_i reaches b_j upward
// through s for j > i and downward entry through t for j < i, never
// b_i.  4m - 4 elements, 6m - 10 covers, height m.  Labels a1.., b1..,
// s2.., t2...  The embedding ships with the instance and passes the
// Euler check.
struct KellyInstance {
  Poset poset;
  std::vector<IncPair> witness;
  PlanarEmbedding embedding;
};
KellyInstance gen_kelly(int m);

// Min/max pair of the doubling construction, with a bag that contains
// both endpoints.
struct VerticalPair {
  int low = 0;
  int high = 0;
  int bag = 0;
  IncPair pair() const { return {low, high}; }
};

// Height-2h poset whose minimal and maximal elements induce a standard
// example of order 2^binom(h+t-1, t), together with a width <= 2t+1
// tree decomposition of its diagram built during the recursion.
struct PhtInstance {
  Poset poset;
  std::vector<VerticalPair> vertical_pairs;
  TreeDecomposition td;
  int h = 0;
  int t = 0;
};
PhtInstance gen_pht(int h, int t);

// Largest construction fitting height <= h and treewidth <= t: the
// (floor(h/2), floor((t-1)/2)) instance.  Requires h >= 4, t >= 3.
PhtInstance gen_for_height_width(int h, int t);

}  // namespace posetlab
