#pragma once

#include <map>
#include <optional>
#include <vector>

#include "posetlab/poset.hpp"
#include "posetlab/signatures.hpp"

namespace posetlab {

// Per-element machinery for the support-element decomposition.  The
// coloring radius is 4h-4; witnesses live in reach sets of radius 2h-2.
struct SupportColoring {
  GreedyColoring phi;       // radius 4h-4
  ReachProfile reach;       // radius 2h-2
  std::vector<int> tau;     // tau[z] = color of the leftmost element below z
  int reach_c = 0;          // max weak reach size at radius 4h-4
};

SupportColoring support_coloring(const Poset& p, const VertexOrder& pi);

// Unique element of the radius-(2h-2) reach set of z with color i, if
// any; ColorCollisionError when two elements share the color (excluded
// by the coloring radius).
std::optional<int> witness_of_color(const Poset& p, const SupportColoring& sc,
                                    int z, int i);

// Signature (tau(y), alpha) of a pair: alpha records how the color-
// tau(y) witnesses of x and y relate (1 equal, 2 x's witness left of
// y's, 3 right of it or undefined).
struct TauSignature {
  int tau = 0;
  int alpha = 0;  // 1, 2 or 3
  friend bool operator==(const TauSignature&, const TauSignature&) = default;
  friend auto operator<=>(const TauSignature&, const TauSignature&) = default;
};

TauSignature tau_signature(const Poset& p, const SupportColoring& sc,
                           const IncPair& pr);

// Partition of a pair set by (tau, alpha).  Classes with alpha in {2, 3}
// are reversible by construction; a failed check throws
// InternalProofViolation.
struct TauPartitionResult {
  std::map<TauSignature, std::vector<IncPair>> classes;
  SupportColoring coloring;
  VertexOrder order;
};
TauPartitionResult tau_partition(const Poset& p, const std::vector<IncPair>& pairs,
                                 const VertexOrder& pi);

// Picks the element q whose alpha=1 sub-class realizes the largest
// dimension and restricts the pair set to {(x, y) : q <= y}.  The
// restriction loses at most a factor c plus an additive 2, where c is
// the max weak reach size at radius 4h-4 under the order used.
struct SupportReport {
  int q = -1;
  std::vector<IncPair> restricted;  // pairs of `pairs` with q <= y
  int dim_all = 1;
  int dim_restricted = 1;
  int c = 1;
  bool inequality_holds = false;  // dim_restricted >= dim_all / c - 2
  bool verified = true;   // false when a dim call exceeded its budget
  int radius = 0;         // 4h - 4
  bool exact_order = false;
};

struct SupportOptions {
  int dim_pair_budget = 60;
  bool force_heuristic_order = false;
  int wcol_exact_max_n = 9;
};

SupportReport find_support_element(const Poset& p,
                                   const std::vector<IncPair>& pairs,
                                   const SupportOptions& opts = {});

}  // namespace posetlab
