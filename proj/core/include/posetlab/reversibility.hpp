#pragma once

#include <optional>
#include <vector>

#include "posetlab/errors.hpp"
#include "posetlab/poset.hpp"

namespace posetlab {

// Pairs (x_1,y_1)..(x_k,y_k), k >= 2, with x_i <= y_{i+1} cyclically.
// A set of incomparable pairs can be reversed by a single linear
// extension exactly when it contains no such cycle.
struct AlternatingCycle {
  std::vector<IncPair> pairs;
  int size() const { return static_cast<int>(pairs.size()); }
};

struct ReversiblePartition {
  std::vector<std::vector<IncPair>> classes;
  int size() const { return static_cast<int>(classes.size()); }
};

struct Realizer {
  std::vector<LinearExtension> extensions;
  int size() const { return static_cast<int>(extensions.size()); }
};

// Thrown when a pair set admits no reversing extension; carries a
// witnessing alternating cycle.
struct NotReversibleError : Error {
  AlternatingCycle cycle;
  NotReversibleError(const std::string& msg, AlternatingCycle c)
      : Error(msg), cycle(std::move(c)) {}
};

// Searches the digraph on pairs with an arc a -> b iff x_a <= y_b.
// Returns a cycle in arc order, or nullopt when the set is reversible.
// Throws NotIncomparableError if any pair is comparable in p.
std::optional<AlternatingCycle> find_alternating_cycle(
    const Poset& p, const std::vector<IncPair>& pairs);

// Linear extension of p placing y before x for every pair (x, y); the
// lexicographically smallest such extension.  Throws NotReversibleError
// with a witnessing cycle when none exists.
LinearExtension reversing_extension(const Poset& p,
                                    const std::vector<IncPair>& pairs);

struct DimResult {
  int dim = 1;
  ReversiblePartition partition;
};

// Least number of reversible classes covering `pairs`, by iterative-
// deepening branch and bound (most-constrained-first pair order, class
// symmetry breaking, incremental cycle checks).  dim of the empty set
// is 1 by convention.  Throws BudgetExceededError carrying greedy
// bounds when |pairs| > pair_budget; the returned certificate is
// re-verified before returning.
DimResult dim_exact(const Poset& p, const std::vector<IncPair>& pairs,
                    int pair_budget = 60);
// dim of the whole poset, i.e. of all its incomparable pairs.
DimResult dim_exact(const Poset& p, int pair_budget = 60);

// Independent oracle: enumerates every linear extension of p, records
// which incomparable pairs each one reverses, and solves minimum set
// cover exactly over those masks.  Shares no code with dim_exact or the
// cycle detector.  Requires |Inc(p)| <= max_inc (SizeLimitError).
int brute_force_dim_oracle(const Poset& p, int max_inc = 14);

// Every extension is a linear extension of p and every incomparable
// ordered pair is reversed by at least one of them.
bool verify_realizer(const Poset& p, const Realizer& r);

// One reversing extension per class.  The partition must cover all of
// Inc(p) for the result to verify.
Realizer partition_to_realizer(const Poset& p, const ReversiblePartition& pi);

// True iff the classes are disjoint and their union is exactly Inc(p).
bool is_partition_of_incomparables(const Poset& p,
                                   const ReversiblePartition& pi);

}  // namespace posetlab
