#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"

#include "oddimm/constructive.hpp"
#include "oddimm/errors.hpp"
#include "oddimm/family.hpp"

#include <algorithm>
#include <random>

using namespace oddimm;

namespace {

const ImmersionFlags so = ImmersionFlags::strong_odd();

void check_third(const Graph &g) {
  ImmersionCertificate c = build_third_immersion(g);
  REQUIRE(c.t >= ceil_third(g.order()));
  REQUIRE(verify_certificate(g, c, so).accepted);
}

SideStructure make_side(VertexSet x, VertexSet terminals, VertexSet blocked, VertexSet linked, VertexSet outside) {
  SideStructure s;
  s.x = x;
  s.terminals = terminals;
  s.others = blocked | linked;
  s.blocked = blocked;
  s.linked = linked;
  s.outside = outside;
  s.support = terminals | s.others;
  s.t = terminals.size();
  return s;
}

// Side 1: T1 = {0..4}, C1 = {5}, Z1 = {6, 7}.  Side 2: T2 = {8}, B2 = {9},
// C2 = {10}, Z2 = {11}.  The source 6 sees terminal 0, then 5 and 7.
JoinStructure twelve_vertex_instance() {
  JoinStructure js;
  Graph g(12);
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) g.add_edge(a, b);
  g.add_edge(5, 0);
  g.add_edge(6, 0);
  g.add_edge(6, 5);
  g.add_edge(6, 7);
  g.add_edge(8, 9);
  g.add_edge(8, 10);
  g.add_edge(10, 11);
  for (int a = 0; a < 8; ++a)
    for (int b = 8; b < 12; ++b) g.add_edge(a, b);
  js.host = g;
  js.side[0] = make_side(VertexSet::range(8), VertexSet::range(5), {}, VertexSet::of({5}), VertexSet::of({6, 7}));
  js.side[1] = make_side(VertexSet::range(12) - VertexSet::range(8), VertexSet::of({8}), VertexSet::of({9}),
                         VertexSet::of({10}), VertexSet::of({11}));
  return js;
}

bool shares_edge(const Path &p, const Path &q) {
  for (std::size_t a = 0; a + 1 < p.size(); ++a)
    for (std::size_t b = 0; b + 1 < q.size(); ++b)
      if (std::minmax(p[a], p[a + 1]) == std::minmax(q[b], q[b + 1])) return true;
  return false;
}

// Checks every emitted path against the four templates and the reservation rules.
void check_templates(const JoinStructure &js, const ExtensionState &state) {
  const int v = state.v;
  const int i = js.side_of(v);
  const SideStructure &own = js.side[i];
  const SideStructure &other = js.side[1 - i];
  const VertexSet terminals = js.all_terminals();
  for (std::size_t k = 0; k < state.solved_paths.size(); ++k) {
    const Path &p = state.solved_paths[k];
    REQUIRE(p.front() == v);
    REQUIRE(terminals.contains(p.back()));
    for (std::size_t e = 0; e + 1 < p.size(); ++e) {
      REQUIRE(js.host.adjacent(p[e], p[e + 1]));
      REQUIRE_FALSE(js.reserved_edge(p[e], p[e + 1]));
    }
    for (std::size_t l = 0; l < k; ++l) REQUIRE_FALSE(shares_edge(p, state.solved_paths[l]));
    if (p.size() == 2) continue;
    REQUIRE(p.size() == 4);
    REQUIRE(own.terminals.contains(p[3]));
    int a = p[1], b = p[2];
    bool type2 = state.b_v && b == *state.b_v && ((own.outside | own.linked) - VertexSet::single(v)).contains(a);
    bool type3 = state.z_v && b == *state.z_v && other.outside.contains(a);
    bool type4 = other.linked.contains(a) && other.outside.contains(b) && js.host.adjacent(a, b);
    REQUIRE((type2 || type3 || type4));
  }
  // Targets are distinct.
  VertexSet ends;
  for (const Path &p : state.solved_paths) {
    REQUIRE_FALSE(ends.contains(p.back()));
    ends.insert(p.back());
  }
  REQUIRE((ends | state.unresolved) == terminals);
  REQUIRE(state.unresolved.subset_of(own.terminals));
}

} // namespace

TEST_SUITE("constructive") {

TEST_CASE("third immersion examples") {
  ImmersionCertificate k6 = build_third_immersion(Graph::complete(6));
  CHECK(k6.t == 2);
  CHECK(k6.terminals == std::vector<int>{0, 1});
  CHECK(k6.paths.at({0, 1}) == Path{0, 1});

  std::vector<BuildTraceStep> steps;
  ImmersionCertificate c5 = build_third_immersion(Graph::cycle(5), [&](const BuildTraceStep &s) { steps.push_back(s); });
  CHECK(c5.t == 2);
  CHECK(c5.terminals == std::vector<int>{2, 3});
  CHECK(verify_certificate(Graph::cycle(5), c5, so).accepted);
  REQUIRE(steps.size() == 1);
  CHECK(steps[0].branch == BuildBranch::low_degree_vertex);

  Graph cp = complement(Graph::petersen());
  ImmersionCertificate big = build_third_immersion(cp);
  CHECK(big.t >= 4);
  CHECK(verify_certificate(cp, big, so).accepted);
  CHECK(max_clique_immersion(cp, so).t_max >= 4);

  CHECK(build_third_immersion(Graph(1)).t == 1);
  CHECK(build_third_immersion(Graph(2)).t == 1);
}

TEST_CASE("third immersion preconditions") {
  CHECK_THROWS_AS(build_third_immersion(Graph(0)), degenerate_input);
  try {
    build_third_immersion(Graph::cycle(7));
    FAIL("expected an independent triple");
  } catch (const independent_triple_error &e) {
    auto [a, b, c] = e.witness;
    CHECK(is_independent(Graph::cycle(7), VertexSet::of({a, b, c})));
  }
  CHECK_THROWS_AS(build_third_immersion(Graph(3)), precondition_error);
}

TEST_CASE("every alpha <= 2 class up to 7 vertices") {
  for (int n = 1; n <= 7; ++n)
    for (const Graph &g : enumerate_alpha_le2(n)) check_third(g);
}

TEST_CASE("500 random alpha <= 2 graphs, 10 to 15 vertices") {
  int done = 0;
  for (int n = 10; n <= 15; ++n) {
    int count = n == 10 ? 85 : 83;
    for (const Graph &g : sample_alpha_le2(n, count, 500 + n)) {
      check_third(g);
      ++done;
    }
  }
  CHECK(done == 500);
}

TEST_CASE("recursion shrinks by two and stays shallow") {
  std::vector<Graph> graphs;
  for (int n = 1; n <= 8; ++n)
    for (Graph &g : enumerate_alpha_le2(n)) graphs.push_back(std::move(g));
  for (int n = 10; n <= 20; ++n)
    for (Graph &g : sample_alpha_le2(n, 20, 77 + n)) graphs.push_back(std::move(g));
  int extended = 0;
  for (const Graph &g : graphs) {
    const int n = g.order();
    std::vector<BuildTraceStep> steps;
    build_third_immersion(g, [&](const BuildTraceStep &s) { steps.push_back(s); });
    REQUIRE_FALSE(steps.empty());
    int deepest = 0;
    for (const auto &s : steps) {
      REQUIRE(s.n == n - 2 * s.depth);
      REQUIRE(s.t >= ceil_third(s.n));
      deepest = std::max(deepest, s.depth);
      if (s.branch == BuildBranch::extended) ++extended;
    }
    REQUIRE(deepest <= (n + 1) / 2);
    REQUIRE(static_cast<int>(steps.size()) == deepest + 1);
    REQUIRE(steps.back().depth == 0);
  }
  CHECK(extended > 0);
}

TEST_CASE("a low-degree vertex forces a large clique, n <= 8") {
  int fired = 0;
  for (int n = 1; n <= 8; ++n)
    for (const Graph &g : enumerate_alpha_le2(n)) {
      bool low = false;
      for (int x = 0; x < n; ++x) low = low || g.degree(x) <= (2 * n) / 3 - 1;
      if (!low) continue;
      ++fired;
      REQUIRE(clique_number(g) >= ceil_third(n));
    }
  CHECK(fired > 0);
}

TEST_CASE("extension step examples") {
  Graph g = Graph::complete(4);
  g.remove_edge(2, 3);
  auto grown = extension_step(g, 3, 2, clique_certificate(VertexSet::of({0, 1})));
  REQUIRE(grown);
  CHECK(grown->t == 3);
  CHECK(grown->terminals == std::vector<int>{0, 1, 2});
  for (const auto &[key, path] : grown->paths) CHECK(path_length(path) == 1);
  CHECK(verify_certificate(g, *grown, so).accepted);

  // Terminal 0 is reached from v = 1 through the relay 3 and u = 2.
  Graph relay(4, {{0, 2}, {1, 3}, {2, 3}});
  auto via = extension_step(relay, 2, 1, clique_certificate(VertexSet::of({0})));
  REQUIRE(via);
  CHECK(via->paths.at({0, 1}) == Path{0, 2, 3, 1});
  CHECK(verify_certificate(relay, *via, so).accepted);

  Graph stuck(3, {{0, 2}});
  CHECK_FALSE(extension_step(stuck, 2, 1, clique_certificate(VertexSet::of({0}))));
}

TEST_CASE("extension step preconditions") {
  Graph g = Graph::complete(4);
  g.remove_edge(2, 3);
  auto base = clique_certificate(VertexSet::of({0, 1}));
  CHECK_THROWS_AS(extension_step(g, 0, 2, base), precondition_error);
  CHECK_THROWS_AS(extension_step(g, 2, 2, base), precondition_error);
  CHECK_THROWS_AS(extension_step(g, 3, 9, base), precondition_error);
  Graph h(4, {{0, 1}, {0, 2}, {1, 2}});
  CHECK_THROWS_AS(extension_step(h, 2, 3, clique_certificate(VertexSet::of({0, 1, 2}))), precondition_error);
  ImmersionCertificate bent = clique_certificate(VertexSet::of({0, 1}));
  bent.paths[{0, 1}] = {0, 2, 1};
  Graph p(4, {{0, 2}, {1, 2}});
  CHECK_THROWS_AS(extension_step(p, 3, 2, bent), precondition_error);
}

TEST_CASE("extension adds one short or one relayed path per terminal") {
  int grown = 0;
  for (int n = 4; n <= 13; ++n)
    for (const Graph &g : sample_alpha_le2(n, 25, 900 + n)) {
      int v = -1, u = -1;
      for (int a = 0; a < n && v < 0; ++a)
        for (int b = a + 1; b < n; ++b)
          if (!g.adjacent(a, b)) {
            v = a;
            u = b;
            break;
          }
      if (v < 0) continue;
      InducedSubgraph rest = induced_subgraph(g, g.vertices() - VertexSet::of({u, v}));
      if (rest.graph.order() == 0) continue;
      auto base = relabel_certificate(build_third_immersion(rest.graph), rest.to_host);
      auto out = extension_step(g, u, v, base);
      if (!out) continue;
      ++grown;
      REQUIRE(verify_certificate(g, *out, so).accepted);
      int direct = 0, relayed = 0;
      for (int k = 0; k < base.t; ++k) {
        int len = path_length(out->paths.at({k, base.t}));
        if (len == 1) ++direct;
        if (len == 3) ++relayed;
      }
      int adjacent = g.degree_in(v, base.terminal_set());
      REQUIRE(direct == adjacent);
      REQUIRE(relayed == base.t - adjacent);
    }
  CHECK(grown > 0);
}

TEST_CASE("type paths: nothing left to solve") {
  Graph g(5, {{0, 1}, {0, 2}, {1, 2}, {3, 0}});
  for (int a = 0; a < 4; ++a) g.add_edge(a, 4);
  JoinStructure js;
  js.host = g;
  js.side[0] = make_side(VertexSet::range(4), VertexSet::range(3), {}, {}, VertexSet::of({3}));
  js.side[1] = make_side(VertexSet::of({4}), VertexSet::of({4}), {}, {}, {});
  REQUIRE(js.consistent());
  ExtensionState state = initial_extension_state(js, 3);
  state.unresolved = {};
  ExtensionState after = build_type_paths(js, 3, state);
  CHECK(after.solved_paths.empty());
  CHECK(after.unresolved.empty());
}

TEST_CASE("type paths: direct edges reach every terminal") {
  Graph g(5, {{0, 1}, {0, 2}, {1, 2}, {3, 0}, {3, 1}, {3, 2}});
  for (int a = 0; a < 4; ++a) g.add_edge(a, 4);
  JoinStructure js;
  js.host = g;
  js.side[0] = make_side(VertexSet::range(4), VertexSet::range(3), {}, {}, VertexSet::of({3}));
  js.side[1] = make_side(VertexSet::of({4}), VertexSet::of({4}), {}, {}, {});
  REQUIRE(js.consistent());
  ExtensionState after = build_type_paths(js, 3, initial_extension_state(js, 3));
  CHECK(after.solved_paths.size() == 4);
  CHECK(after.unresolved.empty());
  for (const Path &p : after.solved_paths) CHECK(path_length(p) == 1);
}

TEST_CASE("type paths: twelve-vertex tally") {
  JoinStructure js = twelve_vertex_instance();
  REQUIRE(js.consistent());
  const int v = 6;
  const auto &s1 = js.side[0];
  const auto &s2 = js.side[1];
  int tally = js.host.degree_in(v, s1.terminals) + s2.terminals.size() + js.host.degree_in(v, s1.others) +
              s1.outside.size() - 1 + s2.outside.size() - 1 + s2.linked.size();
  CHECK(tally == 5);

  ExtensionState after = build_type_paths(js, v, initial_extension_state(js, v));
  check_templates(js, after);
  CHECK(static_cast<int>(after.solved_paths.size()) == tally);
  CHECK(after.b_v == 9);
  CHECK(after.z_v == 11);
  std::vector<Path> expected{{6, 0}, {6, 8}, {6, 5, 9, 1}, {6, 7, 9, 2}, {6, 10, 11, 3}};
  CHECK(after.solved_paths == expected);
  CHECK(after.unresolved == VertexSet::of({4}));

  // Paths already solved are not repeated and their edges are not reused.
  ExtensionState again = build_type_paths(js, v, after);
  CHECK(again.solved_paths == after.solved_paths);
}

TEST_CASE("type paths: source must lie outside the supports") {
  JoinStructure js = twelve_vertex_instance();
  CHECK_THROWS_AS(build_type_paths(js, 0, initial_extension_state(js, 0)), precondition_error);
  CHECK_THROWS_AS(build_type_paths(js, 5, initial_extension_state(js, 5)), precondition_error);
  CHECK_THROWS_AS(build_type_paths(js, 6, initial_extension_state(js, 7)), precondition_error);
  CHECK_NOTHROW(build_type_paths(js, 11, initial_extension_state(js, 11)));
}

TEST_CASE("acceptable paths") {
  JoinStructure js = twelve_vertex_instance();
  ExtensionState s = initial_extension_state(js, 6);
  CHECK(acceptable_path(js, s, {6, 0}));
  CHECK_FALSE(acceptable_path(js, s, {6, 5, 0}));       // even
  CHECK_FALSE(acceptable_path(js, s, {6, 8, 9, 1}));    // passes through a terminal
  CHECK_FALSE(acceptable_path(js, s, {6, 5, 0, 8}));    // 5-0 lies inside M1
  CHECK_FALSE(acceptable_path(js, s, {6, 0, 8, 1}));    // terminal interior and T1-T2 edge
  CHECK_FALSE(acceptable_path(js, s, {7, 8}));          // wrong source
  CHECK_FALSE(acceptable_path(js, s, {6, 7}));          // 7 is not a terminal
  s.unresolved.erase(0);
  CHECK_FALSE(acceptable_path(js, s, {6, 0}));          // already solved
}

TEST_CASE("classify support examples") {
  Graph k6 = Graph::complete(6);
  JoinStructure js = classify_support(k6, {VertexSet::of({0, 1, 2}), VertexSet::of({3, 4, 5})}, so);
  CHECK(js.consistent());
  for (int s = 0; s < 2; ++s) {
    CHECK(js.side[s].t == 3);
    CHECK(js.side[s].support == js.side[s].x);
    CHECK(js.side[s].terminals == js.side[s].x);
    CHECK(js.side[s].others.empty());
    CHECK(js.side[s].outside.empty());
    CHECK(js.side[s].blocked.empty());
    CHECK(js.side[s].linked.empty());
  }

  Graph wheel = helpers::join(Graph::cycle(5), Graph(1));
  auto jp = find_join_partition(wheel);
  REQUIRE(jp);
  CHECK(jp->x1 == VertexSet::range(5));
  JoinStructure w = classify_support(wheel, *jp, so);
  CHECK(w.consistent());
  CHECK(w.side[0].t == 3);
  CHECK(w.side[0].support == VertexSet::range(5));
  CHECK(w.side[0].others.size() == 2);
  CHECK(w.side[0].outside.empty());
  CHECK(w.side[1].t == 1);
  CHECK(w.side[1].terminals == VertexSet::of({5}));
  CHECK(verify_certificate(wheel, w.side[0].witness, so).accepted);

  Graph twin = helpers::join(Graph::cycle(5), Graph::cycle(5));
  auto tj = find_join_partition(twin);
  REQUIRE(tj);
  JoinStructure t2 = classify_support(twin, *tj, so);
  CHECK(t2.consistent());
  for (int s = 0; s < 2; ++s) {
    CHECK(t2.side[s].t == 3);
    CHECK(t2.side[s].support == t2.side[s].x);
    CHECK(t2.side[s].terminals.size() == 3);
    CHECK(t2.side[s].others.size() == 2);
    CHECK(t2.side[s].outside.empty());
  }
  CHECK(oracle::max_clique_immersion(Graph::cycle(5), true, true) == 3);

  CHECK_THROWS_AS(classify_support(Graph::cycle(4), {VertexSet::of({0, 1}), VertexSet::of({2, 3})}, so),
                  precondition_error);
}

TEST_CASE("type paths on joins of random sides follow the templates") {
  std::mt19937_64 rng(404);
  int sources = 0;
  for (int rep = 0; rep < 40; ++rep) {
    Graph a = helpers::random_graph(3 + rep % 4, 0.5, rng);
    Graph b = helpers::random_graph(3 + (rep / 4) % 4, 0.5, rng);
    Graph g = helpers::join(a, b);
    JoinPartition jp{VertexSet::range(a.order()), VertexSet::range(g.order()) - VertexSet::range(a.order())};
    JoinStructure js = classify_support(g, jp, so);
    REQUIRE(js.consistent());
    for (int s = 0; s < 2; ++s) {
      InducedSubgraph core = induced_subgraph(g, js.side[s].support);
      REQUIRE(find_clique_immersion(core.graph, js.side[s].t, so));
      REQUIRE(verify_certificate(g, js.side[s].witness, so).accepted);
      for (int z : js.side[s].outside) {
        ExtensionState st = build_type_paths(js, z, initial_extension_state(js, z));
        check_templates(js, st);
        ++sources;
      }
    }
  }
  CHECK(sources > 0);
}

}
