#include "posetlab/config.hpp"

#include <cstdlib>

namespace posetlab {

namespace {

long env_long(const char* name, long fallback) {
  const char* s = std::getenv(name);
  if (!s || !*s) return fallback;
  char* end = nullptr;
  const long v = std::strtol(s, &end, 10);
  if (end == s || *end != '\0' || v <= 0) return fallback;
  return v;
}

}  // namespace

Budgets Budgets::from_env() {
  Budgets b;
  b.dim_pairs = static_cast<int>(env_long("POSETLAB_BUDGET_DIM_PAIRS", b.dim_pairs));
  b.wcol_exact_n = static_cast<int>(env_long("POSETLAB_BUDGET_WCOL_N", b.wcol_exact_n));
  b.digits_limit = env_long("POSETLAB_BUDGET_DIGITS", b.digits_limit);
  return b;
}

}  // namespace posetlab
