#include "oddimm/checks.hpp"
#include "oddimm/constructive.hpp"
#include "oddimm/errors.hpp"

#include <algorithm>
#include <chrono>

namespace oddimm {

namespace {

template <typename F>
auto timed(CheckReport &report, const std::string &stage, F &&f) {
  auto start = std::chrono::steady_clock::now();
  auto result = f();
  report.runtime_ms[stage] =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

bool applies(Check c, int alpha) {
  switch (c) {
  case Check::main:
  case Check::appendix:
  case Check::vergara: return alpha <= 2;
  case Check::alpha3: return alpha == 3;
  }
  return false;
}

BoundResult judge(Check c, CheckReport &report, const Graph &g) {
  BoundResult r{c, 0, Verdict::not_applicable};
  if (!applies(c, report.alpha)) return r;
  switch (c) {
  case Check::main:
    r.bound_value = main_bound(report.t_max_strong_odd);
    r.verdict = report.chi <= r.bound_value ? Verdict::pass : Verdict::fail;
    break;
  case Check::vergara:
    r.bound_value = vergara_bound(report.t_max_plain);
    r.verdict = report.n <= r.bound_value ? Verdict::pass : Verdict::fail;
    break;
  case Check::alpha3:
    r.bound_value = alpha3_bound(report.t_max_strong_odd);
    if (report.t_max_strong_odd < 2)
      r.verdict = Verdict::out_of_regime;
    else
      r.verdict = report.chi <= r.bound_value ? Verdict::pass : Verdict::fail;
    break;
  case Check::appendix: {
    r.bound_value = ceil_third(report.n);
    if (report.n == 0) return {c, 0, Verdict::not_applicable};
    auto cert = timed(report, "appendix", [&] { return build_third_immersion(g); });
    bool verified = verify_certificate(g, cert, ImmersionFlags::strong_odd()).accepted;
    r.verdict = verified && cert.t >= r.bound_value ? Verdict::pass : Verdict::fail;
    report.appendix_certificate = std::move(cert);
    break;
  }
  }
  return r;
}

CheckReport single(const Graph &g, Check c) {
  CheckReport r = evaluate(g, {c});
  if (r.bounds.front().verdict == Verdict::not_applicable)
    throw inapplicable_check(to_string(c) + " check does not apply to a graph with alpha = " +
                             std::to_string(r.alpha));
  return r;
}

} // namespace

std::string to_string(Check c) {
  switch (c) {
  case Check::main: return "main";
  case Check::appendix: return "appendix";
  case Check::vergara: return "vergara";
  case Check::alpha3: return "alpha3";
  }
  return "unknown";
}

std::string to_string(Verdict v) {
  switch (v) {
  case Verdict::pass: return "true";
  case Verdict::fail: return "false";
  case Verdict::not_applicable: return "na";
  case Verdict::out_of_regime: return "out_of_regime";
  }
  return "unknown";
}

std::optional<Check> parse_check(const std::string &name) {
  for (Check c : {Check::main, Check::appendix, Check::vergara, Check::alpha3})
    if (to_string(c) == name) return c;
  return std::nullopt;
}

bool CheckReport::any_failure() const {
  return std::any_of(bounds.begin(), bounds.end(), [](const BoundResult &b) { return b.verdict == Verdict::fail; });
}

const BoundResult *CheckReport::find(Check c) const {
  for (const auto &b : bounds)
    if (b.check == c) return &b;
  return nullptr;
}

CheckReport evaluate(const Graph &g, const std::vector<Check> &checks) {
  CheckReport r;
  r.graph6 = encode_graph6(g);
  r.n = g.order();
  r.alpha = timed(r, "alpha", [&] { return independence_number(g); });
  auto chromatic = timed(r, "chi", [&] { return chromatic_number(g); });
  r.chi = chromatic.chi;
  r.coloring = chromatic.witness;
  if (r.n > 0) {
    auto plain = timed(r, "t_max_plain", [&] { return max_clique_immersion(g, ImmersionFlags::plain()); });
    auto strong = timed(r, "t_max_strong_odd", [&] { return max_clique_immersion(g, ImmersionFlags::strong_odd()); });
    r.t_max_plain = plain.t_max;
    r.plain_witness = std::move(plain.witness);
    r.t_max_strong_odd = strong.t_max;
    r.strong_odd_witness = std::move(strong.witness);
  }
  for (Check c : checks) r.bounds.push_back(judge(c, r, g));
  return r;
}

CheckReport check_theorem_main(const Graph &g) { return single(g, Check::main); }

CheckReport check_appendix(const Graph &g) {
  auto triple = find_independent_triple(g);
  if (triple[0] >= 0) throw independent_triple_error(triple);
  if (g.order() == 0) throw degenerate_input("K_0 is not representable as a certificate");
  return single(g, Check::appendix);
}

CheckReport check_vergara(const Graph &g) { return single(g, Check::vergara); }

CheckReport check_alpha3(const Graph &g) { return single(g, Check::alpha3); }

} // namespace oddimm
