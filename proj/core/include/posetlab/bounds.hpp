#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "posetlab/errors.hpp"

namespace posetlab {

using BigInt = boost::multiprecision::cpp_int;

// Exact integer with the formula it came from, for reports.
struct BoundValue {
  BigInt value;
  std::string formula;
};

// Two deliberately different binomial implementations; the tests pin
// them against each other.
BigInt binomial_multiplicative(const BigInt& n, int k);
BigInt binomial_pascal(int n, int k);

enum class GraphClass { genus, treewidth, minor_free };

// Weak r-coloring upper bounds:
//   genus g:        (2g + binom(r+2, 2)) * (2r + 1)
//   treewidth t:    binom(t + r, t)
//   K_t-minor-free: binom(r+t-2, t-2) * (t-3) * (2r+1),  t >= 4
// DomainError for parameters outside each formula's domain.
BoundValue wcol_bound(GraphClass cls, int param, int r);

// Dimension upper bound 4^c from a weak coloring number c.
BoundValue dim_upper_bound_from_wcol(const BigInt& c);
// Dimension upper bound for height-h posets whose diagram lies in the
// class: 4^{wcol_bound(cls, param, 3h-3)}.
BoundValue dim_upper_bound(GraphClass cls, int param, int h);

// Largest dimension achieved by the doubling construction at height 2h
// and width 2t+1: 2^binom(h+t-1, t).
BoundValue dim_lower_bound_construction(int h, int t);

// Dimension threshold above which a poset of height <= h with c bounding
// the weak (4h-4)-coloring of its diagram forces a subdivided clique:
// (3c)^f with f = binom(m+h, h), m = binom(t,2)^(h^t).  The result can
// be astronomically large, so the decimal size is estimated first and
// BudgetExceededError is thrown above digits_limit.
BoundValue subdivision_threshold(int h, int t, const BigInt& c,
                                 long digits_limit = 200000);

}  // namespace posetlab
