#include "oddimm/family.hpp"
#include "oddimm/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>

namespace oddimm {

namespace {

constexpr int enumeration_cap = 9;

using Cells = std::vector<VertexSet>;
using Key = std::vector<std::uint64_t>;

// Splits cells by neighbour counts into each cell until stable. Every choice
// depends only on cell positions and counts, so the result commutes with
// relabelling.
void refine(const Graph &g, Cells &cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
      const VertexSet splitter = cells[s];
      Cells next;
      next.reserve(cells.size());
      for (VertexSet cell : cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::map<int, VertexSet> groups;
        for (int v : cell) groups[g.degree_in(v, splitter)].insert(v);
        for (const auto &[count, group] : groups) next.push_back(group);
        if (groups.size() > 1) changed = true;
      }
      cells = std::move(next);
    }
  }
}

Key leaf_key(const Graph &g, const Cells &cells, std::vector<int> &position) {
  for (std::size_t p = 0; p < cells.size(); ++p) position[cells[p].first()] = static_cast<int>(p);
  Key rows(cells.size(), 0);
  for (std::size_t p = 0; p < cells.size(); ++p)
    for (int w : g.neighbors(cells[p].first())) rows[p] |= std::uint64_t{1} << position[w];
  return rows;
}

bool twins(const Graph &g, int u, int v) {
  return (g.neighbors(u) - VertexSet::single(v)) == (g.neighbors(v) - VertexSet::single(u));
}

void search(const Graph &g, Cells cells, Key &best, std::vector<int> &best_position,
            std::vector<int> &scratch) {
  refine(g, cells);
  auto open = std::find_if(cells.begin(), cells.end(), [](VertexSet c) { return c.size() > 1; });
  if (open == cells.end()) {
    Key key = leaf_key(g, cells, scratch);
    if (best.empty() || key < best) {
      best = std::move(key);
      best_position = scratch;
    }
    return;
  }
  const std::size_t index = static_cast<std::size_t>(open - cells.begin());
  const VertexSet cell = *open;
  std::vector<int> explored;
  for (int v : cell) {
    if (std::any_of(explored.begin(), explored.end(), [&](int r) { return twins(g, r, v); })) continue;
    explored.push_back(v);
    Cells next;
    next.reserve(cells.size() + 1);
    next.insert(next.end(), cells.begin(), cells.begin() + index);
    next.push_back(VertexSet::single(v));
    next.push_back(cell - VertexSet::single(v));
    next.insert(next.end(), cells.begin() + index + 1, cells.end());
    search(g, std::move(next), best, best_position, scratch);
  }
}

std::vector<int> canonical_positions(const Graph &g) {
  const int n = g.order();
  if (n == 0) return {};
  Key best;
  std::vector<int> best_position(n), scratch(n);
  search(g, Cells{g.vertices()}, best, best_position, scratch);
  return best_position;
}

// Every class on n vertices arises from a class on n - 1 vertices plus one
// new vertex joined to an admissible neighbourhood.
std::vector<Graph> extend_classes(int n, const std::function<bool(const Graph &, VertexSet)> &admissible,
                                  const std::function<std::vector<Graph>(int)> &smaller) {
  if (n == 0) return {Graph(0)};
  std::map<Key, Graph> found;
  for (const Graph &h : smaller(n - 1)) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n - 1)); ++bits) {
      VertexSet s{bits};
      if (!admissible(h, s)) continue;
      Graph g(n);
      for (auto [a, b] : h.edges()) g.add_edge(a, b);
      for (int w : s) g.add_edge(w, n - 1);
      Graph c = canonical_form(g);
      Key key = canonical_key(c);
      found.emplace(std::move(key), std::move(c));
    }
  }
  std::vector<Graph> out;
  out.reserve(found.size());
  for (auto &[key, g] : found) out.push_back(std::move(g));
  return out;
}

void check_enumeration_order(int n, int low) {
  if (n > enumeration_cap)
    throw unsupported_size("exhaustive enumeration is capped at n = 9; use random sampling for larger orders");
  if (n < low) throw precondition_error("enumeration order must be at least " + std::to_string(low));
}

std::uint64_t bounded(std::mt19937_64 &rng, std::uint64_t range) {
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % range;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % range;
}

} // namespace

Graph canonical_form(const Graph &g) {
  std::vector<int> position = canonical_positions(g);
  Graph c(g.order());
  for (auto [a, b] : g.edges()) c.add_edge(position[a], position[b]);
  return c;
}

std::vector<std::uint64_t> canonical_key(const Graph &g) {
  Graph c = canonical_form(g);
  Key rows(c.order());
  for (int v = 0; v < c.order(); ++v) rows[v] = c.neighbors(v).bits();
  return rows;
}

std::vector<Graph> enumerate_triangle_free(int n) {
  check_enumeration_order(n, 0);
  return extend_classes(n, is_independent, enumerate_triangle_free);
}

std::vector<Graph> enumerate_alpha_le2(int n) {
  check_enumeration_order(n, 1);
  std::vector<Graph> out;
  for (const Graph &h : enumerate_triangle_free(n)) out.push_back(complement(h));
  return out;
}

std::vector<Graph> enumerate_all_graphs(int n) {
  check_enumeration_order(n, 0);
  return extend_classes(n, [](const Graph &, VertexSet) { return true; }, enumerate_all_graphs);
}

std::vector<Graph> sample_alpha_le2(int n, int count, std::uint64_t seed) {
  if (n < 1 || n > max_vertices) throw precondition_error("sample order must be in 1..62");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  std::vector<Graph> out;
  out.reserve(std::max(count, 0));
  for (int k = 0; k < count; ++k) {
    for (std::size_t i = slots.size(); i > 1; --i) std::swap(slots[i - 1], slots[bounded(rng, i)]);
    Graph h(n);
    for (auto [u, v] : slots)
      if ((h.neighbors(u) & h.neighbors(v)).empty()) h.add_edge(u, v);
    out.push_back(complement(h));
  }
  return out;
}

Graph sample_bipartite(int a, int b, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = a; v < a + b; ++v)
      if (rng() & 1) g.add_edge(u, v);
  return g;
}

} // namespace oddimm
