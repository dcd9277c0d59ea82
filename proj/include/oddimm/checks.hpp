#pragma once

#include "oddimm/coloring.hpp"
#include "oddimm/graph.hpp"
#include "oddimm/immersion.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace oddimm {

enum class Check {
  main,     // chi <= ceil(3 t / 2), t = strong odd t_max, alpha <= 2
  appendix, // constructive strong odd K_ceil(n/3), alpha <= 2
  vergara,  // n <= 2 t + 1, t = plain t_max, alpha <= 2
  alpha3,   // chi <= 4 t, t = strong odd t_max, alpha == 3
};

enum class Verdict {
  pass,
  fail,
  not_applicable, // the graph is outside the check's hypothesis (alpha)
  out_of_regime,  // alpha3 with t_max < 2: the bound is not meaningful there
};

std::string to_string(Check c);
std::string to_string(Verdict v);
std::optional<Check> parse_check(const std::string &name);

struct BoundResult {
  Check check{};
  int bound_value = 0;
  Verdict verdict = Verdict::not_applicable;
};

struct CheckReport {
  std::string graph6;
  int n = 0;
  int alpha = 0;
  int chi = 0;
  int t_max_plain = 0;
  int t_max_strong_odd = 0;
  std::vector<BoundResult> bounds;
  std::map<std::string, double> runtime_ms;

  ColoringCertificate coloring;
  ImmersionCertificate plain_witness;
  ImmersionCertificate strong_odd_witness;
  std::optional<ImmersionCertificate> appendix_certificate;

  bool any_failure() const;
  const BoundResult *find(Check c) const;
};

// Integer forms of the bounds recorded in a report.
inline int main_bound(int t_strong_odd) { return (3 * t_strong_odd + 1) / 2; }
inline int vergara_bound(int t_plain) { return 2 * t_plain + 1; }
inline int alpha3_bound(int t_strong_odd) { return 4 * t_strong_odd; }

// Computes the shared invariants once and evaluates every requested check.
// Checks whose hypothesis the graph misses are recorded as not_applicable.
CheckReport evaluate(const Graph &g, const std::vector<Check> &checks);

// Single-check entry points. They throw inapplicable_check when the graph
// misses the hypothesis.
CheckReport check_theorem_main(const Graph &g);
CheckReport check_appendix(const Graph &g);
CheckReport check_vergara(const Graph &g);
CheckReport check_alpha3(const Graph &g);

} // namespace oddimm
