#include "oddimm/constructive.hpp"
#include "oddimm/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace oddimm {

namespace {

ImmersionCertificate build_recursive(const Graph &g, int depth, const BuildTrace &trace) {
  const int n = g.order();
  auto emit = [&](BuildBranch branch, ImmersionCertificate cert) {
    if (trace) trace({depth, n, branch, cert.t});
    return cert;
  };

  // A vertex of degree <= floor(2n/3) - 1 has >= ceil(n/3) non-neighbours,
  // and with alpha <= 2 they form a clique.
  const int low_degree = (2 * n) / 3 - 1;
  for (int x = 0; x < n; ++x)
    if (g.degree(x) <= low_degree)
      return emit(BuildBranch::low_degree_vertex, clique_certificate(non_neighborhood(g, x)));

  if (g.edge_count() == n * (n - 1) / 2)
    return emit(BuildBranch::complete, clique_certificate(VertexSet::range(ceil_third(n))));

  int u = -1, v = -1;
  for (int a = 0; a < n && v < 0; ++a) {
    VertexSet later = non_neighborhood(g, a) - VertexSet::range(a + 1);
    if (!later.empty()) {
      v = a;
      u = later.first();
    }
  }

  VertexSet pair = VertexSet::of({u, v});
  InducedSubgraph rest = induced_subgraph(g, g.vertices() - pair);
  ImmersionCertificate base = relabel_certificate(build_recursive(rest.graph, depth + 1, trace), rest.to_host);
  base = truncate_certificate(base, ceil_third(n - 2));

  if (auto grown = extension_step(g, u, v, base)) return emit(BuildBranch::extended, std::move(*grown));

  // Too few common neighbours: the non-neighbours of u outside the terminals,
  // together with v, induce a clique of order >= ceil(n/3).
  VertexSet outside = g.vertices() - pair - base.terminal_set();
  VertexSet clique = (outside - g.neighbors(u)) | VertexSet::single(v);
  if (!is_clique(g, clique) || clique.size() < ceil_third(n))
    throw std::logic_error("clique fallback produced an invalid clique; input violates alpha <= 2");
  return emit(BuildBranch::clique_fallback, clique_certificate(clique));
}

bool try_add(const JoinStructure &js, ExtensionState &state, Path p) {
  if (!acceptable_path(js, state, p)) return false;
  state.unresolved.erase(p.back());
  state.solved_paths.push_back(std::move(p));
  return true;
}

} // namespace

std::string to_string(BuildBranch b) {
  switch (b) {
  case BuildBranch::low_degree_vertex: return "low-degree";
  case BuildBranch::complete: return "complete";
  case BuildBranch::extended: return "extended";
  case BuildBranch::clique_fallback: return "clique-fallback";
  }
  return "unknown";
}

ImmersionCertificate build_third_immersion(const Graph &g, const BuildTrace &trace) {
  if (g.order() == 0) throw degenerate_input("K_0 is not representable as a certificate");
  auto triple = find_independent_triple(g);
  if (triple[0] >= 0) throw independent_triple_error(triple);
  return build_recursive(g, 0, trace);
}

std::optional<ImmersionCertificate> extension_step(const Graph &g, int u, int v,
                                                   const ImmersionCertificate &base) {
  const int n = g.order();
  if (u < 0 || v < 0 || u >= n || v >= n || u == v)
    throw precondition_error("extension vertices must be two distinct vertices of the host");
  if (g.adjacent(u, v)) throw precondition_error("extension vertices must be non-adjacent");
  const VertexSet pair = VertexSet::of({u, v});
  try {
    if (!verify_certificate(g, base, ImmersionFlags::strong_odd()).accepted)
      throw precondition_error("base certificate is not a strong odd immersion");
  } catch (const malformed_certificate &e) {
    throw precondition_error(std::string("base certificate malformed: ") + e.what());
  }
  if (!(base.terminal_set() & pair).empty())
    throw precondition_error("base terminals must avoid the extension vertices");
  for (const auto &[key, path] : base.paths)
    for (int w : path)
      if (pair.contains(w)) throw precondition_error("base paths must avoid the extension vertices");

  const VertexSet terminals = base.terminal_set();
  const VertexSet rest = g.vertices() - pair - terminals;
  const VertexSet common = rest & g.neighbors(u) & g.neighbors(v);
  const VertexSet targets = terminals - g.neighbors(v);
  if (common.size() < targets.size()) return std::nullopt;
  if (!targets.subset_of(g.neighbors(u))) return std::nullopt;

  // Targets ascending matched to common neighbours ascending.
  std::vector<int> relay(n, -1);
  auto next_common = common.begin();
  for (int t : targets) relay[t] = *next_common++;

  ImmersionCertificate out = base;
  out.t = base.t + 1;
  out.terminals.push_back(v);
  for (int i = 0; i < base.t; ++i) {
    int t = base.terminals[i];
    if (g.adjacent(v, t))
      out.paths[{i, base.t}] = {t, v};
    else
      out.paths[{i, base.t}] = {t, u, relay[t], v};
  }
  return out;
}

int JoinStructure::side_of(int v) const {
  for (int s = 0; s < 2; ++s)
    if (side[s].x.contains(v)) return s;
  return -1;
}

bool JoinStructure::reserved_edge(int a, int b) const {
  for (int s = 0; s < 2; ++s) {
    if (side[s].support.contains(a) && side[s].support.contains(b)) return true;
    if (side[s].terminals.contains(a) && side[1 - s].terminals.contains(b)) return true;
  }
  return false;
}

bool JoinStructure::consistent() const {
  if (!(side[0].x & side[1].x).empty()) return false;
  if ((side[0].x | side[1].x) != host.vertices()) return false;
  for (const auto &s : side) {
    if (!(s.terminals & s.others).empty() || !(s.terminals & s.outside).empty() ||
        !(s.others & s.outside).empty())
      return false;
    if ((s.terminals | s.others | s.outside) != s.x) return false;
    if ((s.terminals | s.others) != s.support) return false;
    if (!(s.blocked & s.linked).empty() || (s.blocked | s.linked) != s.others) return false;
    for (int b : s.blocked)
      if (!(host.neighbors(b) & s.outside).empty()) return false;
  }
  for (int a : side[0].x)
    if (!side[1].x.subset_of(host.neighbors(a))) return false;
  return true;
}

ExtensionState initial_extension_state(const JoinStructure &js, int v) {
  ExtensionState state;
  state.v = v;
  state.unresolved = js.all_terminals();
  return state;
}

bool acceptable_path(const JoinStructure &js, const ExtensionState &state, const Path &p) {
  if (p.size() < 2 || p.front() != state.v) return false;
  if (path_length(p) % 2 == 0) return false;
  if (!state.unresolved.contains(p.back())) return false;
  const VertexSet terminals = js.all_terminals();
  VertexSet seen;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (seen.contains(p[k])) return false;
    seen.insert(p[k]);
    if (k > 0 && k + 1 < p.size() && terminals.contains(p[k])) return false;
    if (k + 1 == p.size()) break;
    int a = p[k], b = p[k + 1];
    if (!js.host.adjacent(a, b) || js.reserved_edge(a, b)) return false;
    for (const auto &q : state.solved_paths)
      for (std::size_t e = 0; e + 1 < q.size(); ++e)
        if ((q[e] == a && q[e + 1] == b) || (q[e] == b && q[e + 1] == a)) return false;
  }
  return true;
}

ExtensionState build_type_paths(const JoinStructure &js, int v, ExtensionState state) {
  const int i = js.side_of(v);
  if (i < 0 || !js.side[i].outside.contains(v))
    throw precondition_error("source vertex " + std::to_string(v) + " is not in Z1 or Z2");
  if (state.v != v) throw precondition_error("extension state belongs to another source vertex");
  const int j = 1 - i;
  const SideStructure &own = js.side[i];
  const SideStructure &other = js.side[j];

  state.b_v = other.blocked.empty() ? std::nullopt : std::optional<int>(other.blocked.first());
  state.z_v = other.outside.empty() ? std::nullopt : std::optional<int>(other.outside.first());

  // Type 1: direct edges to any terminal.
  for (int t : state.unresolved)
    if (js.host.adjacent(v, t)) try_add(js, state, {v, t});

  auto own_targets = [&] { return state.unresolved & own.terminals; };

  // Type 2: (v, v', b_v, t).
  if (state.b_v) {
    for (int mid : (own.outside | own.linked) - VertexSet::single(v))
      for (int t : own_targets())
        if (try_add(js, state, {v, mid, *state.b_v, t})) break;
  }

  // Type 3: (v, z', z_v, t).
  if (state.z_v) {
    for (int mid : other.outside - VertexSet::single(*state.z_v))
      for (int t : own_targets())
        if (try_add(js, state, {v, mid, *state.z_v, t})) break;
  }

  // Type 4: (v, x, x', t).
  for (int x : other.linked) {
    bool done = false;
    for (int hop : js.host.neighbors(x) & other.outside) {
      for (int t : own_targets())
        if (try_add(js, state, {v, x, hop, t})) {
          done = true;
          break;
        }
      if (done) break;
    }
  }
  return state;
}

JoinStructure classify_support(const Graph &g, const JoinPartition &jp, ImmersionFlags f) {
  if (!is_join_partition(g, jp)) throw precondition_error("not a join partition of the graph");
  JoinStructure js;
  js.host = g;
  const std::array<VertexSet, 2> parts{jp.x1, jp.x2};
  for (int s = 0; s < 2; ++s) {
    SideStructure &side = js.side[s];
    side.x = parts[s];
    InducedSubgraph part = induced_subgraph(g, side.x);
    side.t = max_clique_immersion(part.graph, f).t_max;
    for (int w : minimize_support(part.graph, side.t, f)) side.support.insert(part.to_host[w]);

    // Minimisation may discard the original witness, so search again inside G[M].
    InducedSubgraph core = induced_subgraph(g, side.support);
    auto witness = find_clique_immersion(core.graph, side.t, f);
    if (!witness) throw std::logic_error("minimal support lost its immersion");
    side.witness = relabel_certificate(*witness, core.to_host);
    side.terminals = side.witness.terminal_set();
    side.others = side.support - side.terminals;
    side.outside = side.x - side.support;
    for (int a : side.others) {
      if ((g.neighbors(a) & side.outside).empty())
        side.blocked.insert(a);
      else
        side.linked.insert(a);
    }
  }
  return js;
}

} // namespace oddimm
