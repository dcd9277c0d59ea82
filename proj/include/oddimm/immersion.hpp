#pragma once

#include "oddimm/graph.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace oddimm {

struct ImmersionFlags {
  bool strong = false;
  bool odd = false;

  static constexpr ImmersionFlags plain() { return {false, false}; }
  static constexpr ImmersionFlags strong_odd() { return {true, true}; }
  bool operator==(const ImmersionFlags &) const = default;
};

std::string to_string(ImmersionFlags f);

// Vertex sequence v0..vl of a path; its length is the number of edges.
using Path = std::vector<int>;

inline int path_length(const Path &p) { return static_cast<int>(p.size()) - 1; }

// Unordered terminal-index pair, stored with first < second.
using TerminalPair = std::pair<int, int>;

// A K_t-immersion witness: terminal i sits on vertex terminals[i], and
// paths[{i, j}] runs from terminals[i] to terminals[j].
struct ImmersionCertificate {
  int t = 0;
  std::vector<int> terminals;
  std::map<TerminalPair, Path> paths;

  VertexSet terminal_set() const;
  bool operator==(const ImmersionCertificate &) const = default;
};

// Single-edge certificate on the members of a clique, in increasing order.
ImmersionCertificate clique_certificate(VertexSet clique);

// Keeps the first `t` terminals and the paths between them.
ImmersionCertificate truncate_certificate(const ImmersionCertificate &c, int t);

// Maps every vertex through `to_host`.
ImmersionCertificate relabel_certificate(const ImmersionCertificate &c,
                                         const std::vector<int> &to_host);

struct VerifyReport {
  bool accepted = false;
  std::vector<std::string> violations;
};

// Throws malformed_certificate when the certificate cannot be interpreted
// at all (bad t, terminal out of range, missing or extra pair keys).
VerifyReport verify_certificate(const Graph &g, const ImmersionCertificate &c, ImmersionFlags f);

std::optional<ImmersionCertificate> find_clique_immersion(const Graph &g, int t, ImmersionFlags f);

struct MaxImmersion {
  int t_max = 0;
  ImmersionCertificate witness;
};

MaxImmersion max_clique_immersion(const Graph &g, ImmersionFlags f);

// Inclusion-wise minimal vertex set whose induced subgraph still carries a
// K_t-immersion under f. Removals are tried from the highest vertex down,
// restarting after each successful removal.
VertexSet minimize_support(const Graph &g, int t, ImmersionFlags f);

// Certificate JSON:
// {"t": 3, "terminals": [..], "paths": {"0,1": [..], ..}, "flags": {"strong": b, "odd": b}}
nlohmann::ordered_json certificate_to_json(const ImmersionCertificate &c, ImmersionFlags f);
std::pair<ImmersionCertificate, ImmersionFlags> certificate_from_json(const nlohmann::json &j);

} // namespace oddimm
