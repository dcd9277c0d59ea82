#include "oddimm/graph.hpp"
#include "oddimm/errors.hpp"

#include <algorithm>

namespace oddimm {

namespace {

constexpr char graph6_header[] = ">>graph6<<";
constexpr int graph6_bias = 63;

void check_order(int n) {
  if (n < 0 || n > max_vertices)
    throw unsupported_size("graph order " + std::to_string(n) + " outside 0.." +
                           std::to_string(max_vertices));
}

void check_vertex(const Graph &g, int v) {
  if (v < 0 || v >= g.order())
    throw precondition_error("vertex " + std::to_string(v) + " out of range for order " +
                             std::to_string(g.order()));
}

// Branch and bound for a maximum clique inside `cand`, greedy colouring bound.
// Candidates are coloured in increasing index order and expanded from the
// highest colour down, so the first maximum found is deterministic.
void expand_clique(const Graph &g, VertexSet cand, VertexSet current, VertexSet &best) {
  std::array<int, max_vertices> order{};
  std::array<int, max_vertices> bound{};
  int count = 0;
  VertexSet uncoloured = cand;
  int colour = 0;
  while (!uncoloured.empty()) {
    ++colour;
    VertexSet available = uncoloured;
    while (!available.empty()) {
      int v = available.first();
      available -= g.neighbors(v) | VertexSet::single(v);
      uncoloured.erase(v);
      order[count] = v;
      bound[count] = colour;
      ++count;
    }
  }
  for (int i = count - 1; i >= 0; --i) {
    if (current.size() + bound[i] <= best.size()) return;
    int v = order[i];
    VertexSet next = current | VertexSet::single(v);
    VertexSet next_cand = cand & g.neighbors(v);
    if (next_cand.empty()) {
      if (next.size() > best.size()) best = next;
    } else {
      expand_clique(g, next_cand, next, best);
    }
    cand.erase(v);
  }
}

} // namespace

Graph::Graph(int n) : n_(n) { check_order(n); }

Graph::Graph(int n, const std::vector<std::pair<int, int>> &edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int v = 0; v < n; ++v) g.adj_[v] = VertexSet::range(n) - VertexSet::single(v);
  return g;
}

Graph Graph::cycle(int n) {
  Graph g(n);
  for (int v = 0; v < n && n >= 3; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph Graph::path(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph Graph::complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = a; v < a + b; ++v) g.add_edge(u, v);
  return g;
}

// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
Graph Graph::petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
    g.add_edge(i, i + 5);
  }
  return g;
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += adj_[v].size();
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

void Graph::add_edge(int u, int v) {
  check_vertex(*this, u);
  check_vertex(*this, v);
  if (u == v) throw precondition_error("loop at vertex " + std::to_string(u));
  adj_[u].insert(v);
  adj_[v].insert(u);
}

void Graph::remove_edge(int u, int v) {
  check_vertex(*this, u);
  check_vertex(*this, v);
  adj_[u].erase(v);
  adj_[v].erase(u);
}

bool Graph::valid() const {
  if (n_ < 0 || n_ > max_vertices) return false;
  for (int v = 0; v < max_vertices; ++v) {
    if (v >= n_) {
      if (!adj_[v].empty()) return false;
      continue;
    }
    if (adj_[v].contains(v)) return false;
    if (!adj_[v].subset_of(vertices())) return false;
    for (int u : adj_[v])
      if (!adj_[u].contains(v)) return false;
  }
  return true;
}

bool Graph::operator==(const Graph &o) const {
  if (n_ != o.n_) return false;
  for (int v = 0; v < n_; ++v)
    if (adj_[v] != o.adj_[v]) return false;
  return true;
}

Graph parse_graph6(std::string_view line) {
  std::size_t offset = 0;
  if (line.starts_with(graph6_header)) offset = sizeof(graph6_header) - 1;
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);

  if (offset >= line.size()) throw parse_error("missing size byte", offset);
  int size_byte = static_cast<unsigned char>(line[offset]);
  if (size_byte == 126)
    throw parse_error("multi-byte size prefix unsupported (order > 62)", offset);
  if (size_byte < graph6_bias || size_byte > 126)
    throw parse_error("byte out of graph6 range", offset);
  int n = size_byte - graph6_bias;
  if (n > max_vertices) throw parse_error("order exceeds 62", offset);
  ++offset;

  std::size_t bit_count = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::size_t byte_count = (bit_count + 5) / 6;
  if (line.size() - offset < byte_count)
    throw parse_error("truncated adjacency data", line.size());
  if (line.size() - offset > byte_count)
    throw parse_error("trailing garbage", offset + byte_count);

  std::vector<bool> bits;
  bits.reserve(byte_count * 6);
  for (std::size_t b = 0; b < byte_count; ++b) {
    int value = static_cast<unsigned char>(line[offset + b]);
    if (value < graph6_bias || value > 126)
      throw parse_error("byte out of graph6 range", offset + b);
    value -= graph6_bias;
    for (int k = 5; k >= 0; --k) bits.push_back((value >> k) & 1);
  }
  for (std::size_t k = bit_count; k < bits.size(); ++k)
    if (bits[k]) throw parse_error("nonzero padding bit", offset + k / 6);

  Graph g(n);
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit)
      if (bits[bit]) g.add_edge(i, j);
  return g;
}

std::string encode_graph6(const Graph &g) {
  int n = g.order();
  if (n > max_vertices) throw unsupported_size("graph6 encoding limited to 62 vertices");
  std::string out(1, static_cast<char>(n + graph6_bias));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + graph6_bias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + graph6_bias));
  return out;
}

Graph complement(const Graph &g) {
  Graph h(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) h.add_edge(u, v);
  return h;
}

VertexSet non_neighborhood(const Graph &g, int x) {
  check_vertex(g, x);
  return g.vertices() - g.neighbors(x) - VertexSet::single(x);
}

InducedSubgraph induced_subgraph(const Graph &g, VertexSet s) {
  if (!s.subset_of(g.vertices())) throw precondition_error("subset exceeds host vertices");
  InducedSubgraph out;
  out.to_host = s.to_vector();
  out.to_sub.assign(g.order(), -1);
  for (std::size_t i = 0; i < out.to_host.size(); ++i) out.to_sub[out.to_host[i]] = static_cast<int>(i);
  out.graph = Graph(s.size());
  for (std::size_t i = 0; i < out.to_host.size(); ++i)
    for (int w : g.neighbors(out.to_host[i]) & s)
      if (out.to_sub[w] > static_cast<int>(i)) out.graph.add_edge(static_cast<int>(i), out.to_sub[w]);
  return out;
}

Graph remove_vertices(const Graph &g, VertexSet s) {
  return induced_subgraph(g, g.vertices() - s).graph;
}

bool is_clique(const Graph &g, VertexSet s) {
  for (int v : s)
    if (!(s - VertexSet::single(v)).subset_of(g.neighbors(v))) return false;
  return true;
}

bool is_independent(const Graph &g, VertexSet s) {
  for (int v : s)
    if (!(g.neighbors(v) & s).empty()) return false;
  return true;
}

VertexSet maximum_clique(const Graph &g) {
  VertexSet best;
  if (g.order() == 0) return best;
  expand_clique(g, g.vertices(), VertexSet{}, best);
  return best;
}

int clique_number(const Graph &g) { return maximum_clique(g).size(); }

VertexSet maximum_independent_set(const Graph &g) { return maximum_clique(complement(g)); }

int independence_number(const Graph &g) { return maximum_independent_set(g).size(); }

std::array<int, 3> find_independent_triple(const Graph &g) {
  for (int a = 0; a < g.order(); ++a) {
    VertexSet rest = g.vertices() - g.neighbors(a) - VertexSet::range(a + 1);
    for (int b : rest) {
      VertexSet third = rest - g.neighbors(b) - VertexSet::range(b + 1);
      if (!third.empty()) return {a, b, third.first()};
    }
  }
  return {-1, -1, -1};
}

bool is_connected(const Graph &g) {
  if (g.order() <= 1) return true;
  VertexSet seen = VertexSet::single(0);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (int v : frontier) next |= g.neighbors(v);
    frontier = next - seen;
    seen |= next;
  }
  return seen == g.vertices();
}

} // namespace oddimm
