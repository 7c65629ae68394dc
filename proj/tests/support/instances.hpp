#pragma once

// Worked matrices and seeded random instances shared by the unit and
// acceptance tests.

#include <cstddef>
#include <random>
#include <vector>

#include "pcm/graph.hpp"
#include "pcm/matrix.hpp"

namespace pcm::testing {

using Rng = std::mt19937_64;

/// 4x4 with a 4-cycle pattern: a12=2, a23=1/3, a34=5, a14=4; (1,3), (2,4) unspecified.
PartialMatrix four_cycle_example();
/// The same with a14 = 10/3, the value that makes every cycle product 1.
PartialMatrix four_cycle_corrected();
/// 5x5 N(x, y) with (1,5) and (2,5) unspecified and a12 = 6.
PartialMatrix five_by_five_example();
/// Rows and columns 2..5 of the 5x5 example: (1,4) unspecified.
PartialMatrix five_by_five_lower_block();
/// 3x3 block P joined to the completed 5x5 example.
ReciprocalMatrix three_by_three_block();

double log_uniform(Rng& rng, double lo, double hi);
std::vector<double> random_weights(Rng& rng, std::size_t n);
std::vector<std::size_t> random_permutation(Rng& rng, std::size_t n);

/// Chordal graph built by attaching each new vertex to a random clique,
/// then relabelled at random. With `connected` false a new vertex starts a
/// fresh component with probability 1/4.
SpecGraph random_chordal_graph(Rng& rng, std::size_t n, bool connected = true);
/// Connected graph: random spanning tree plus each other edge with probability p.
SpecGraph random_connected_graph(Rng& rng, std::size_t n, double p);
/// Connected graph that is not chordal (n >= 4).
SpecGraph random_non_chordal_graph(Rng& rng, std::size_t n);
/// Arbitrary graph, each edge with probability p.
SpecGraph random_graph(Rng& rng, std::size_t n, double p);

/// Independent log-uniform values in [lo, hi] on the edges of g.
PartialMatrix random_values_on(Rng& rng, const SpecGraph& g, double lo = 1.0 / 9.0, double hi = 9.0);
/// Entries w_i / w_j on the edges of g.
PartialMatrix weights_on(const SpecGraph& g, const std::vector<double>& w);

/// result(perm[i], perm[j]) = m(i, j).
PartialMatrix permute(const PartialMatrix& m, const std::vector<std::size_t>& perm);

}  // namespace pcm::testing
