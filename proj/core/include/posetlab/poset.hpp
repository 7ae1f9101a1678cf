#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace posetlab {

using Bits = boost::dynamic_bitset<>;

// Ordered pair of incomparable elements.
struct IncPair {
  int x = 0;
  int y = 0;
  friend bool operator==(const IncPair&, const IncPair&) = default;
  friend auto operator<=>(const IncPair&, const IncPair&) = default;
};

// Permutation of [0, n); order[i] is the element at position i and
// pos[order[i]] == i.
struct LinearExtension {
  std::vector<int> order;
  std::vector<int> pos;

  static LinearExtension from_order(std::vector<int> order);
  int size() const { return static_cast<int>(order.size()); }
  // True iff a sits at a smaller position than b.
  bool before(int a, int b) const { return pos[a] < pos[b]; }
};

// Finite poset on elements 0..n-1.  The strict order is stored closed in
// both directions; construction is only via from_cover_relations, after
// which the object is immutable except for labels.
class Poset {
 public:
  // Builds the reflexive-free transitive closure of the given arcs.
  // The arcs may contain transitive redundancy; duplicates are allowed
  // here (the text parser is stricter).  Throws IndexError for ids
  // outside [0, n) and CycleError when the arcs admit a directed cycle.
  static Poset from_cover_relations(int n,
                                    const std::vector<std::pair<int, int>>& covers);

  int size() const { return n_; }
  bool less(int x, int y) const { return up_[x].test(y); }
  bool leq(int x, int y) const { return x == y || up_[x].test(y); }
  bool comparable(int x, int y) const {
    return x == y || up_[x].test(y) || up_[y].test(x);
  }

  // Strict up-set / down-set of a single element, excluding the element.
  const Bits& strict_upset(int x) const { return up_[x]; }
  const Bits& strict_downset(int x) const { return down_[x]; }

  // Transitive reduction, lexicographically sorted (lo, hi) pairs.
  const std::vector<std::pair<int, int>>& cover_relations() const {
    return covers_;
  }

  // Maximum number of elements on a chain; 0 only for the empty poset.
  int height() const { return height_; }
  // 0-based length of the longest chain ending at x.
  int level(int x) const { return level_[x]; }

  // All ordered incomparable pairs (both directions), lexicographic.
  std::vector<IncPair> incomparable_pairs() const;

  // Up-set / down-set of a set of elements, including the set itself.
  Bits upset(const Bits& s) const;
  Bits downset(const Bits& s) const;

  std::vector<int> minimal_elements() const;
  std::vector<int> maximal_elements() const;

  // Restriction to the elements of s, renumbered 0..|s|-1 in increasing
  // original id.  original_ids, if given, receives the id map.
  Poset induced(const Bits& s, std::vector<int>* original_ids = nullptr) const;

  bool is_linear_extension(const LinearExtension& l) const;

  const std::string& label(int x) const { return labels_[x]; }
  void set_label(int x, std::string v) { labels_[x] = std::move(v); }
  bool has_labels() const;

 private:
  Poset() = default;

  int n_ = 0;
  std::vector<Bits> up_;    // up_[x][y]  <=>  x < y
  std::vector<Bits> down_;  // down_[y][x]  <=>  x < y
  std::vector<std::pair<int, int>> covers_;
  std::vector<int> level_;
  int height_ = 0;
  std::vector<std::string> labels_;
};

// Simple undirected graph.  When derived from a poset it is the
// comparability diagram (one edge per cover relation); the wcol machinery
// also uses it for arbitrary graphs read from file.
struct CoverGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // u < v, sorted, no duplicates
  std::vector<std::vector<int>> adj;       // ascending neighbor lists

  static CoverGraph from_edges(int n, std::vector<std::pair<int, int>> edges);
  int edge_count() const { return static_cast<int>(edges.size()); }
  bool connected() const;
  int component_count() const;
};

CoverGraph cover_graph(const Poset& p);

// True iff the listed (a_i, b_i) pairs induce a standard example: all
// 2m elements distinct, a_i < b_j exactly for i != j, and the a's, b's,
// and each (a_i, b_i) pairwise incomparable.  Pure verification; never
// searches for a witness.
bool verify_standard_example(const Poset& p, const std::vector<IncPair>& pairs);

}  // namespace posetlab
