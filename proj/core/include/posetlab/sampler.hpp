#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "posetlab/poset.hpp"

namespace posetlab {

// All sampling goes through one engine type so that a seed pins every
// byte of downstream output.
using Rng = std::mt19937_64;

// Uniform integer in [0, n); avoids std::uniform_int_distribution, whose
// output is not pinned by the standard.
std::uint64_t rand_below(Rng& rng, std::uint64_t n);

// Layered random poset: each element gets a level below max_height and
// arcs between increasing levels appear with probability density.
// Height is at most max_height.
Poset sample_random_poset(Rng& rng, int n, int max_height, double density);

// Rejection wrapper: resamples (bumping a derived seed) until the poset
// has at most max_inc ordered incomparable pairs.  Tight caps would make
// plain rejection at the requested parameters nonterminating, so each
// round nudges density toward 1 and stretches the height ceiling; late
// rounds therefore sample near-chains, which every cap accepts.
// SizeLimitError after 100000 rounds.
Poset sample_poset_with_bounded_inc(std::uint64_t seed, int n, int max_height,
                                    double density, int max_inc);

// Uniformly shuffled vertex order.
std::vector<int> sample_permutation(Rng& rng, int n);

// Random connected graph on n vertices: a random spanning tree plus each
// remaining edge with probability density.
CoverGraph sample_connected_graph(Rng& rng, int n, double density);

}  // namespace posetlab
