#include "oddimm/coloring.hpp"
#include "oddimm/errors.hpp"

#include <algorithm>

namespace oddimm {

namespace {

// DSATUR backtracking for a fixed colour budget. A new colour is only ever
// opened as the next unused index, which removes colour-permutation symmetry.
class DsaturSearch {
public:
  DsaturSearch(const Graph &g, int k) : g_(g), k_(k), color_(g.order(), -1), classes_(k) {}

  bool run() { return extend(0, 0); }
  const std::vector<int> &colors() const { return color_; }

private:
  int saturation(int v, int used) const {
    int sat = 0;
    for (int c = 0; c < used; ++c)
      if (!(g_.neighbors(v) & classes_[c]).empty()) ++sat;
    return sat;
  }

  int select(int used) const {
    int best = -1, best_sat = -1, best_deg = -1;
    for (int v = 0; v < g_.order(); ++v) {
      if (color_[v] >= 0) continue;
      int sat = saturation(v, used);
      int deg = g_.degree(v);
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        best = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    return best;
  }

  bool extend(int coloured, int used) {
    if (coloured == g_.order()) return true;
    int v = select(used);
    int limit = std::min(used + 1, k_);
    for (int c = 0; c < limit; ++c) {
      if (!(g_.neighbors(v) & classes_[c]).empty()) continue;
      color_[v] = c;
      classes_[c].insert(v);
      if (extend(coloured + 1, std::max(used, c + 1))) return true;
      classes_[c].erase(v);
      color_[v] = -1;
    }
    return false;
  }

  const Graph &g_;
  int k_;
  std::vector<int> color_;
  std::vector<VertexSet> classes_;
};

} // namespace

bool is_proper_coloring(const Graph &g, const ColoringCertificate &c) {
  if (static_cast<int>(c.colors.size()) != g.order()) return false;
  std::vector<bool> seen(std::max(c.k, 0), false);
  for (int v = 0; v < g.order(); ++v) {
    int col = c.colors[v];
    if (col < 0 || col >= c.k) return false;
    seen[col] = true;
    for (int w : g.neighbors(v))
      if (c.colors[w] == col) return false;
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

ColoringCertificate normalize_coloring(std::vector<int> colors) {
  std::vector<int> relabel;
  ColoringCertificate out;
  out.colors.reserve(colors.size());
  for (int c : colors) {
    if (c >= static_cast<int>(relabel.size())) relabel.resize(c + 1, -1);
    if (relabel[c] < 0) relabel[c] = out.k++;
    out.colors.push_back(relabel[c]);
  }
  return out;
}

std::optional<ColoringCertificate> is_k_colorable(const Graph &g, int k) {
  if (k < 0) throw precondition_error("negative colour budget");
  if (g.order() == 0) return ColoringCertificate{};
  if (k == 0) return std::nullopt;
  DsaturSearch search(g, std::min(k, g.order()));
  if (!search.run()) return std::nullopt;
  return normalize_coloring(search.colors());
}

ChromaticResult chromatic_number(const Graph &g) {
  if (g.order() == 0) return {};
  for (int k = clique_number(g);; ++k) {
    if (auto c = is_k_colorable(g, k)) return {c->k, *c};
  }
}

bool is_vertex_critical(const Graph &g, int k) {
  if (chromatic_number(g).chi != k) return false;
  for (int v = 0; v < g.order(); ++v) {
    Graph h = remove_vertices(g, VertexSet::single(v));
    if (!is_k_colorable(h, std::max(k - 1, 0))) return false;
  }
  return true;
}

std::optional<JoinPartition> find_join_partition(const Graph &g) {
  if (g.order() < 2) throw degenerate_input("join partition needs at least two vertices");
  Graph h = complement(g);
  VertexSet seen = VertexSet::single(0);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (int v : frontier) next |= h.neighbors(v);
    frontier = next - seen;
    seen |= next;
  }
  if (seen == g.vertices()) return std::nullopt;
  return JoinPartition{seen, g.vertices() - seen};
}

bool is_join_partition(const Graph &g, const JoinPartition &jp) {
  if (jp.x1.empty() || jp.x2.empty()) return false;
  if (!(jp.x1 & jp.x2).empty() || (jp.x1 | jp.x2) != g.vertices()) return false;
  for (int v : jp.x1)
    if (!jp.x2.subset_of(g.neighbors(v))) return false;
  return true;
}

} // namespace oddimm
