#pragma once

#include <cstdint>

namespace posetlab {

// Budgets shared by the command-line entry points.  Environment
// variables override the defaults; explicit flags override both.
//   POSETLAB_BUDGET_DIM_PAIRS   max |I| for exact dimension
//   POSETLAB_BUDGET_WCOL_N      max n for exhaustive wcol orders
//   POSETLAB_BUDGET_DIGITS      max decimal digits for threshold values
struct Budgets {
  int dim_pairs = 60;
  int wcol_exact_n = 9;
  long digits_limit = 200000;

  static Budgets from_env();
};

struct RunConfig {
  Budgets budgets;
  std::uint64_t seed = 1;
};

}  // namespace posetlab
