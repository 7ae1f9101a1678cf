#pragma once

#include <map>
#include <vector>

#include "posetlab/poset.hpp"
#include "posetlab/reversibility.hpp"
#include "posetlab/wcol.hpp"

namespace posetlab {

// Left-to-right greedy coloring: each vertex gets the smallest color not
// used in its weak reach set (itself excluded).  Colors are 0-based;
// palette <= max reach size.
struct GreedyColoring {
  int radius = 0;
  VertexOrder order;
  std::vector<int> color;
  int palette = 0;
};

GreedyColoring greedy_coloring(const CoverGraph& g, const VertexOrder& pi,
                               int radius);

// Weak up-set / down-set of an element: cover chains leaving x upward
// (downward) whose leftmost vertex is the far end.
struct WeakSets {
  Bits up;
  Bits down;
};
WeakSets weak_up_down(const Poset& p, const VertexOrder& pi, int x);

// Nested color sets c_in_c <= b <= a over the palette; at most 4^palette
// distinct values, which bounds the class count of the partition below.
struct PairSignature {
  Bits a;  // colors of the weak up-set of x
  Bits b;  // a restricted to colors of the weak down-set of y
  Bits c;  // colors i in b whose witness in WU[x] is left of the one in WD[y]
  friend bool operator==(const PairSignature&, const PairSignature&) = default;
  bool operator<(const PairSignature& o) const;
};

// Signature of one incomparable pair under the given coloring.  Requires
// colors to be unique inside each weak up/down set (guaranteed when the
// coloring radius is 3h-3 for height h); ColorCollisionError otherwise.
PairSignature pair_signature(const Poset& p, const VertexOrder& pi,
                             const GreedyColoring& phi, const IncPair& pr);

struct SignaturePartitionResult {
  ReversiblePartition partition;
  std::vector<PairSignature> signatures;  // one per class, sorted
  GreedyColoring coloring;
  int reach_c = 0;      // max weak reach size under the order used
  int radius = 0;       // 3h - 3 unless overridden
  bool exact_order = false;
  bool all_reversible = true;  // can only be false under radius_override
};

// Partitions Inc(p) by pair signature at radius 3*height-3 (the order is
// exhaustive-optimal for small diagrams, smallest-last otherwise).  Each
// class is checked reversible; a failure at the default radius throws
// InternalProofViolation.  radius_override drops the guarantee and skips
// that escalation: classes that fail are reported via the flag below.
struct SignaturePartitionOptions {
  int radius_override = -1;   // < 0: use 3h-3
  bool force_heuristic_order = false;
  int wcol_exact_max_n = 9;
};
SignaturePartitionResult signature_partition(
    const Poset& p, const SignaturePartitionOptions& opts = {});

}  // namespace posetlab
