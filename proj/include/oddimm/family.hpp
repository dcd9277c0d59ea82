#pragma once

#include "oddimm/graph.hpp"

#include <cstdint>
#include <vector>

namespace oddimm {

// Relabelling of g that is identical for all graphs isomorphic to g.
// Computed by colour refinement plus individualisation, keeping the leaf
// whose adjacency rows are lexicographically smallest. Twins in a cell are
// explored once. Practical for the small orders used by the enumerators.
Graph canonical_form(const Graph &g);

// Adjacency rows of the canonical form; equal iff the graphs are isomorphic.
std::vector<std::uint64_t> canonical_key(const Graph &g);

// One representative per isomorphism class, ordered by canonical key.
// The alpha <= 2 family is produced as complements of triangle-free graphs.
// Both enumerators accept 1 <= n <= 9 (0 is allowed for all graphs).
std::vector<Graph> enumerate_triangle_free(int n);
std::vector<Graph> enumerate_alpha_le2(int n);
std::vector<Graph> enumerate_all_graphs(int n);

// Seeded alpha <= 2 graphs: a random maximal triangle-free graph (edges
// offered in a shuffled order, kept when they close no triangle) is drawn
// and complemented. Same (n, count, seed) gives the same sequence.
std::vector<Graph> sample_alpha_le2(int n, int count, std::uint64_t seed);

// Random bipartite graph with sides of sizes a and b, each cross edge kept
// with probability 1/2.
Graph sample_bipartite(int a, int b, std::uint64_t seed);

} // namespace oddimm
