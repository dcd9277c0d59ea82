#pragma once

#include "oddimm/graph.hpp"

#include <random>

namespace helpers {

using oddimm::Graph;

inline Graph random_graph(int n, double p, std::mt19937_64 &rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

// Disjoint union of a and b with every a-b pair joined; b is shifted by |a|.
inline Graph join(const Graph &a, const Graph &b) {
  Graph g(a.order() + b.order());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(a.order() + u, a.order() + v);
  for (int u = 0; u < a.order(); ++u)
    for (int v = 0; v < b.order(); ++v) g.add_edge(u, a.order() + v);
  return g;
}

inline Graph relabel(const Graph &g, const std::vector<int> &perm) {
  Graph h(g.order());
  for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
  return h;
}

} // namespace helpers
