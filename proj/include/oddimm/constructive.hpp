#pragma once

#include "oddimm/coloring.hpp"
#include "oddimm/graph.hpp"
#include "oddimm/immersion.hpp"

#include <array>
#include <functional>
#include <optional>
#include <string>

namespace oddimm {

// ---------------------------------------------------------------------------
// Strong odd K_ceil(n/3) builder for graphs with independence number <= 2.
// ---------------------------------------------------------------------------

enum class BuildBranch {
  low_degree_vertex, // non-neighbourhood of a low-degree vertex is a large clique
  complete,          // host is complete
  extended,          // recursive certificate grown by one terminal
  clique_fallback,   // extension impossible, so a large clique exists
};

std::string to_string(BuildBranch b);

struct BuildTraceStep {
  int depth = 0;
  int n = 0;
  BuildBranch branch{};
  int t = 0;
};

using BuildTrace = std::function<void(const BuildTraceStep &)>;

inline int ceil_third(int n) { return (n + 2) / 3; }

// Certificate with t >= ceil(n/3), valid under strong+odd flags.
// Throws independent_triple_error when alpha(g) >= 3 and degenerate_input when
// g has no vertices.
ImmersionCertificate build_third_immersion(const Graph &g, const BuildTrace &trace = {});

// Adds v as a new terminal to `base`, which must be a strong odd certificate
// of g - {u, v} expressed in g's vertex labels. Neighbours of v in the base
// terminal set get a direct edge; every other terminal t is reached by
// (v, w, u, t) with w a distinct common neighbour of u and v outside the
// terminals. Absent when there are too few common neighbours.
std::optional<ImmersionCertificate> extension_step(const Graph &g, int u, int v,
                                                   const ImmersionCertificate &base);

// ---------------------------------------------------------------------------
// Join-side structures and the four odd path templates.
// ---------------------------------------------------------------------------

struct SideStructure {
  VertexSet x;         // the side of the join partition
  int t = 0;           // largest clique immersion order inside G[x]
  VertexSet support;   // M: minimal subset still carrying that immersion
  VertexSet terminals; // T
  VertexSet others;    // A = M - T
  VertexSet blocked;   // B: members of A with no neighbour in Z
  VertexSet linked;    // C = A - B
  VertexSet outside;   // Z = x - M
  ImmersionCertificate witness; // immersion inside G[M], host labels
};

struct JoinStructure {
  Graph host;
  std::array<SideStructure, 2> side;

  VertexSet all_terminals() const { return side[0].terminals | side[1].terminals; }
  // Index of the side holding v, or -1.
  int side_of(int v) const;
  // Edges of G[M1], G[M2] and G[T1, T2], which extension paths must avoid.
  bool reserved_edge(int a, int b) const;
  // Partition and join invariants.
  bool consistent() const;
};

struct ExtensionState {
  int v = -1;
  std::vector<Path> solved_paths;
  VertexSet unresolved;
  std::optional<int> b_v; // anchor in B of the opposite side
  std::optional<int> z_v; // anchor in Z of the opposite side
};

// Fresh state for source v: nothing solved, every terminal unresolved.
ExtensionState initial_extension_state(const JoinStructure &js, int v);

// True when p may be appended to state.solved_paths: it starts at the
// source, ends at an unresolved terminal, has odd length, no terminal
// interior, and uses no reserved or already used edge.
bool acceptable_path(const JoinStructure &js, const ExtensionState &state, const Path &p);

// Adds every acceptable path of the four templates, type by type:
//   1: (v, t)
//   2: (v, v', b_v, t)  v' in Z_i + C_i
//   3: (v, z', z_v, t)  z' in Z_j - {z_v}
//   4: (v, x, x', t)    x in C_j, x' in N(x) & Z_j
// Throws precondition_error when v is not in Z_1 + Z_2.
ExtensionState build_type_paths(const JoinStructure &js, int v, ExtensionState state);

JoinStructure classify_support(const Graph &g, const JoinPartition &jp, ImmersionFlags f);

} // namespace oddimm
