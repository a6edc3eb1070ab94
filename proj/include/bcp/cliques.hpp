#pragma once

#include <gmpxx.h>

#include <vector>

#include "bcp/graph.hpp"

namespace bcp {

// counts[i] = number of i-vertex cliques of G contained in B; counts[0] = 1
// (the empty clique), so the vector is never empty.
using CliqueCounts = std::vector<mpz_class>;

CliqueCounts clique_counts(const Graph& g, const VertexSet& b);

// counts[i] = sum over i-cliques K inside b of the product of w over K.
CliqueCounts weighted_clique_counts(const Graph& g, const VertexSet& b, const WeightMap& w);

// All cliques contained in b, including the empty one, ordered by size then
// lexicographically by sorted vertex ids. Throws limit_error when more than
// cap cliques exist.
std::vector<VertexSet> enumerate_cliques(const Graph& g, const VertexSet& b, long cap);

// Clique number of G[b]; 0 for empty b.
int omega_b(const Graph& g, const VertexSet& b);

// Maximum independent set inside b, exact branch-and-bound on the complement
// of G[b].
int alpha_b(const Graph& g, const VertexSet& b);

}  // namespace bcp
