#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace oddimm {

inline constexpr int max_vertices = 62;

// A subset of {0, ..., 62} stored in one machine word.
class VertexSet {
public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr VertexSet single(int v) { return VertexSet{std::uint64_t{1} << v}; }
  static constexpr VertexSet range(int n) {
    return VertexSet{n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
  }
  static VertexSet of(std::initializer_list<int> vs) {
    VertexSet s;
    for (int v : vs) s.insert(v);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  // Lowest member; undefined on the empty set.
  constexpr int first() const { return std::countr_zero(bits_); }

  constexpr void insert(int v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet{bits_ | o.bits_}; }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet{bits_ & o.bits_}; }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet{bits_ & ~o.bits_}; }
  constexpr VertexSet &operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet &operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  constexpr VertexSet &operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }
  constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }

  constexpr auto operator<=>(const VertexSet &) const = default;

  class iterator {
  public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator &operator++() { rest_ &= rest_ - 1; return *this; }
    constexpr iterator operator++(int) { auto tmp = *this; ++*this; return tmp; }
    constexpr bool operator==(const iterator &) const = default;
  private:
    std::uint64_t rest_ = 0;
  };
  constexpr iterator begin() const { return iterator{bits_}; }
  constexpr iterator end() const { return iterator{}; }

  std::vector<int> to_vector() const { return {begin(), end()}; }

private:
  std::uint64_t bits_ = 0;
};

// Simple undirected graph on vertices 0..n-1 with n <= 62.
class Graph {
public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, const std::vector<std::pair<int, int>> &edges);

  static Graph complete(int n);
  static Graph empty(int n) { return Graph(n); }
  static Graph cycle(int n);
  static Graph path(int n);
  static Graph complete_bipartite(int a, int b);
  static Graph petersen();

  int order() const { return n_; }
  VertexSet vertices() const { return VertexSet::range(n_); }
  VertexSet neighbors(int v) const { return adj_[v]; }
  bool adjacent(int u, int v) const { return adj_[u].contains(v); }
  int degree(int v) const { return adj_[v].size(); }
  int degree_in(int v, VertexSet s) const { return (adj_[v] & s).size(); }
  int edge_count() const;
  std::vector<std::pair<int, int>> edges() const;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  // Symmetric, loop-free, and no neighbor index >= n.
  bool valid() const;

  bool operator==(const Graph &o) const;

private:
  int n_ = 0;
  std::array<VertexSet, max_vertices> adj_{};
};

struct InducedSubgraph {
  Graph graph;
  std::vector<int> to_host; // new index -> host index
  std::vector<int> to_sub;  // host index -> new index, or -1
};

Graph parse_graph6(std::string_view line);
std::string encode_graph6(const Graph &g);

Graph complement(const Graph &g);
VertexSet non_neighborhood(const Graph &g, int x);
InducedSubgraph induced_subgraph(const Graph &g, VertexSet s);
Graph remove_vertices(const Graph &g, VertexSet s);
bool is_clique(const Graph &g, VertexSet s);
bool is_independent(const Graph &g, VertexSet s);

VertexSet maximum_clique(const Graph &g);
int clique_number(const Graph &g);
VertexSet maximum_independent_set(const Graph &g);
int independence_number(const Graph &g);

// Any independent set of size three, or {-1,-1,-1}.
std::array<int, 3> find_independent_triple(const Graph &g);

bool is_connected(const Graph &g);

} // namespace oddimm
