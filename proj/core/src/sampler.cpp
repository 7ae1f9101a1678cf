#include "posetlab/sampler.hpp"

#include <algorithm>

#include "posetlab/errors.hpp"

namespace posetlab {

std::uint64_t rand_below(Rng& rng, std::uint64_t n) {
  if (n == 0) throw PreconditionError("rand_below needs n >= 1");
  // Rejection keeps the distribution exactly uniform.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % n;
}

// Probability threshold compared against a 53-bit draw; avoids
// std::bernoulli_distribution for the same pinning reason as rand_below.
static bool coin(Rng& rng, double p) {
  const double u =
      static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0);
  return u < p;
}

Poset sample_random_poset(Rng& rng, int n, int max_height, double density) {
  if (n < 0) throw PreconditionError("element count must be >= 0");
  if (max_height < 1) throw PreconditionError("max_height must be >= 1");
  if (!(density >= 0.0 && density <= 1.0))
    throw PreconditionError("density must be in [0, 1]");
  std::vector<int> lvl(n);
  for (int v = 0; v < n; ++v)
    lvl[v] = static_cast<int>(rand_below(rng, max_height));
  std::vector<std::pair<int, int>> covers;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (lvl[u] < lvl[v] && coin(rng, density)) covers.push_back({u, v});
  return Poset::from_cover_relations(n, covers);
}

Poset sample_poset_with_bounded_inc(std::uint64_t seed, int n, int max_height,
                                    double density, int max_inc) {
  for (std::uint64_t round = 0; round < 100000; ++round) {
    Rng rng(seed + 0x9e3779b97f4a7c15ULL * round);
    const double d = std::min(1.0, density + 0.02 * static_cast<double>(round));
    const int h = max_height + static_cast<int>(round * round / 64);
    Poset p = sample_random_poset(rng, n, h, d);
    if (static_cast<int>(p.incomparable_pairs().size()) <= max_inc) return p;
  }
  throw SizeLimitError(
      "bounded-incomparability sampling did not accept after 100000 rounds");
}

std::vector<int> sample_permutation(Rng& rng, int n) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int i = n - 1; i >= 1; --i)
    std::swap(perm[i], perm[rand_below(rng, i + 1)]);
  return perm;
}

CoverGraph sample_connected_graph(Rng& rng, int n, double density) {
  if (n < 1) throw PreconditionError("vertex count must be >= 1");
  if (!(density >= 0.0 && density <= 1.0))
    throw PreconditionError("density must be in [0, 1]");
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v)
    edges.push_back({static_cast<int>(rand_below(rng, v)), v});
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng, density)) edges.push_back({u, v});
  return CoverGraph::from_edges(n, edges);
}

}  // namespace posetlab
