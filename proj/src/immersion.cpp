#include "oddimm/immersion.hpp"
#include "oddimm/errors.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <set>
#include <unordered_set>

namespace oddimm {

namespace {

std::string pair_key(int i, int j) { return std::to_string(i) + "," + std::to_string(j); }

std::string path_text(const Path &p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "-" : "") + std::to_string(p[i]);
  return s;
}

struct MemoKey {
  std::vector<std::uint64_t> words;
  bool operator==(const MemoKey &) const = default;
};

struct MemoHash {
  std::size_t operator()(const MemoKey &k) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (auto w : k.words) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

constexpr std::size_t memo_limit = 1u << 21;

// Exact backtracking search for a K_t-immersion.
//
// Terminal sets are tried in colex order. For a fixed set the C(t,2) pairs are
// routed in lex order; each pair tries every vertex-simple path over the
// still-unused edges, shortest first. Failed (pair index, residual graph)
// states are memoised per terminal set.
class ImmersionSearch {
public:
  ImmersionSearch(const Graph &g, int t, ImmersionFlags f) : g_(g), t_(t), f_(f), n_(g.order()) {}

  std::optional<ImmersionCertificate> run() {
    if (t_ < 1) throw precondition_error("clique order must be at least 1");
    if (n_ < t_) return std::nullopt;
    if (t_ == 1) return clique_certificate(VertexSet::single(0));
    if (g_.edge_count() < t_ * (t_ - 1) / 2) return std::nullopt;

    std::vector<int> candidates;
    for (int v = 0; v < n_; ++v)
      if (g_.degree(v) >= t_ - 1) candidates.push_back(v);
    const int c = static_cast<int>(candidates.size());
    if (c < t_) return std::nullopt;

    // Gosper's hack walks t-subsets of candidate indices in colex order.
    std::uint64_t mask = (std::uint64_t{1} << t_) - 1;
    const std::uint64_t limit = std::uint64_t{1} << c;
    while (mask < limit) {
      std::vector<int> terminals;
      for (int i = 0; i < c; ++i)
        if ((mask >> i) & 1) terminals.push_back(candidates[i]);
      if (try_terminals(terminals)) return build_certificate(terminals);
      std::uint64_t low = mask & (~mask + 1);
      std::uint64_t ripple = mask + low;
      mask = (((ripple ^ mask) >> 2) / low) | ripple;
    }
    return std::nullopt;
  }

private:
  bool try_terminals(const std::vector<int> &terminals) {
    terminal_set_ = VertexSet{};
    for (int v : terminals) terminal_set_.insert(v);
    interior_ok_ = f_.strong ? g_.vertices() - terminal_set_ : g_.vertices();
    for (int v = 0; v < n_; ++v) avail_[v] = g_.neighbors(v);
    free_edges_ = g_.edge_count();
    need_.fill(0);
    pairs_.clear();
    for (int i = 0; i < t_; ++i)
      for (int j = i + 1; j < t_; ++j) {
        pairs_.emplace_back(terminals[i], terminals[j]);
        ++need_[terminals[i]];
        ++need_[terminals[j]];
      }
    chosen_.assign(pairs_.size(), {});
    failed_.clear();
    return solve(0);
  }

  ImmersionCertificate build_certificate(const std::vector<int> &terminals) const {
    ImmersionCertificate cert;
    cert.t = t_;
    cert.terminals = terminals;
    std::size_t k = 0;
    for (int i = 0; i < t_; ++i)
      for (int j = i + 1; j < t_; ++j) cert.paths[{i, j}] = chosen_[k++];
    return cert;
  }

  bool hopeless(int k) const {
    const int unsolved = static_cast<int>(pairs_.size()) - k;
    if (free_edges_ < unsolved) return true;
    for (int v : terminal_set_)
      if (avail_[v].size() < need_[v]) return true;

    // Every unsolved pair must still be connected through allowed interiors.
    std::array<int, max_vertices> component;
    component.fill(-1);
    int label = 0;
    for (int s : interior_ok_) {
      if (component[s] >= 0) continue;
      VertexSet frontier = VertexSet::single(s);
      VertexSet seen = frontier;
      while (!frontier.empty()) {
        VertexSet next;
        for (int v : frontier) next |= avail_[v] & interior_ok_;
        frontier = next - seen;
        seen |= next;
      }
      for (int v : seen) component[v] = label;
      ++label;
    }
    for (std::size_t p = k; p < pairs_.size(); ++p) {
      auto [a, b] = pairs_[p];
      if (avail_[a].contains(b)) continue;
      bool linked = false;
      for (int x : avail_[a] & interior_ok_) {
        if (x == b) continue;
        for (int y : avail_[b] & interior_ok_) {
          if (component[x] == component[y]) {
            linked = true;
            break;
          }
        }
        if (linked) break;
      }
      if (!linked) return true;
    }
    return false;
  }

  MemoKey key(int k) const {
    MemoKey m;
    m.words.reserve(n_ + 1);
    m.words.push_back(static_cast<std::uint64_t>(k));
    for (int v = 0; v < n_; ++v) m.words.push_back(avail_[v].bits());
    return m;
  }

  bool solve(int k) {
    if (k == static_cast<int>(pairs_.size())) return true;
    if (hopeless(k)) return false;
    MemoKey state = key(k);
    if (failed_.contains(state)) return false;

    auto [a, b] = pairs_[k];
    const int step = f_.odd ? 2 : 1;
    for (int len = 1; len < n_; len += step) {
      chosen_[k].assign(1, a);
      if (route(k, a, b, len, VertexSet::single(a))) return true;
    }
    if (failed_.size() >= memo_limit) failed_.clear();
    failed_.insert(std::move(state));
    return false;
  }

  void take(int u, int v) {
    avail_[u].erase(v);
    avail_[v].erase(u);
    --free_edges_;
  }
  void give(int u, int v) {
    avail_[u].insert(v);
    avail_[v].insert(u);
    ++free_edges_;
  }

  bool route(int k, int cur, int target, int remaining, VertexSet visited) {
    if (remaining == 1) {
      if (!avail_[cur].contains(target)) return false;
      take(cur, target);
      chosen_[k].push_back(target);
      --need_[pairs_[k].first];
      --need_[target];
      bool ok = solve(k + 1);
      ++need_[pairs_[k].first];
      ++need_[target];
      if (!ok) chosen_[k].pop_back();
      give(cur, target);
      return ok;
    }
    VertexSet next = avail_[cur] & interior_ok_;
    next -= visited;
    next.erase(target);
    for (int w : next) {
      take(cur, w);
      chosen_[k].push_back(w);
      bool ok = route(k, w, target, remaining - 1, visited | VertexSet::single(w));
      if (ok) return true;
      chosen_[k].pop_back();
      give(cur, w);
    }
    return false;
  }

  const Graph &g_;
  int t_;
  ImmersionFlags f_;
  int n_;
  std::array<VertexSet, max_vertices> avail_{};
  std::array<int, max_vertices> need_{};
  int free_edges_ = 0;
  VertexSet terminal_set_;
  VertexSet interior_ok_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<Path> chosen_; // chosen_[k] is the path being routed for pairs_[k]
  std::unordered_set<MemoKey, MemoHash> failed_;
};

} // namespace

std::string to_string(ImmersionFlags f) {
  if (f.strong && f.odd) return "strong+odd";
  if (f.strong) return "strong";
  if (f.odd) return "odd";
  return "plain";
}

VertexSet ImmersionCertificate::terminal_set() const {
  VertexSet s;
  for (int v : terminals) s.insert(v);
  return s;
}

ImmersionCertificate clique_certificate(VertexSet clique) {
  ImmersionCertificate c;
  c.terminals = clique.to_vector();
  c.t = static_cast<int>(c.terminals.size());
  for (int i = 0; i < c.t; ++i)
    for (int j = i + 1; j < c.t; ++j) c.paths[{i, j}] = {c.terminals[i], c.terminals[j]};
  return c;
}

ImmersionCertificate truncate_certificate(const ImmersionCertificate &c, int t) {
  if (t < 1 || t > c.t) throw precondition_error("truncation order out of range");
  ImmersionCertificate out;
  out.t = t;
  out.terminals.assign(c.terminals.begin(), c.terminals.begin() + t);
  for (const auto &[key, path] : c.paths)
    if (key.second < t) out.paths[key] = path;
  return out;
}

ImmersionCertificate relabel_certificate(const ImmersionCertificate &c,
                                         const std::vector<int> &to_host) {
  ImmersionCertificate out = c;
  for (int &v : out.terminals) v = to_host.at(v);
  for (auto &[key, path] : out.paths)
    for (int &v : path) v = to_host.at(v);
  return out;
}

VerifyReport verify_certificate(const Graph &g, const ImmersionCertificate &c, ImmersionFlags f) {
  if (c.t < 1) throw malformed_certificate("clique order must be at least 1");
  if (static_cast<int>(c.terminals.size()) != c.t)
    throw malformed_certificate("expected " + std::to_string(c.t) + " terminals, got " +
                                std::to_string(c.terminals.size()));
  for (int v : c.terminals)
    if (v < 0 || v >= g.order())
      throw malformed_certificate("terminal " + std::to_string(v) + " out of range");
  for (int i = 0; i < c.t; ++i)
    for (int j = i + 1; j < c.t; ++j)
      if (!c.paths.contains({i, j}))
        throw malformed_certificate("missing path for pair " + pair_key(i, j));
  for (const auto &[key, path] : c.paths) {
    if (key.first < 0 || key.first >= key.second || key.second >= c.t)
      throw malformed_certificate("invalid pair key " + pair_key(key.first, key.second));
    for (int v : path)
      if (v < 0 || v >= g.order())
        throw malformed_certificate("path vertex " + std::to_string(v) + " out of range");
  }

  VerifyReport report;
  auto fail = [&](std::string msg) { report.violations.push_back(std::move(msg)); };

  const VertexSet terminals = c.terminal_set();
  if (terminals.size() != c.t) fail("terminal map is not injective");

  std::map<std::pair<int, int>, TerminalPair> owner;
  for (const auto &[key, path] : c.paths) {
    const std::string where = "pair " + pair_key(key.first, key.second) + " path " + path_text(path);
    if (path.size() < 2) {
      fail(where + ": path has no edge");
      continue;
    }
    int a = c.terminals[key.first], b = c.terminals[key.second];
    bool forward = path.front() == a && path.back() == b;
    bool backward = path.front() == b && path.back() == a;
    if (!forward && !backward) fail(where + ": endpoints do not match terminals");

    VertexSet seen;
    for (std::size_t i = 0; i < path.size(); ++i) {
      if (seen.contains(path[i])) fail(where + ": repeats vertex " + std::to_string(path[i]));
      seen.insert(path[i]);
      if (i + 1 < path.size()) {
        int u = path[i], v = path[i + 1];
        if (!g.adjacent(u, v)) {
          fail(where + ": " + std::to_string(u) + "-" + std::to_string(v) + " is not an edge");
          continue;
        }
        auto edge = std::minmax(u, v);
        auto [it, fresh] = owner.emplace(std::pair{edge.first, edge.second}, key);
        if (!fresh)
          fail(where + ": edge " + std::to_string(edge.first) + "-" + std::to_string(edge.second) +
               " already used by pair " + pair_key(it->second.first, it->second.second));
      }
    }
    if (f.odd && path_length(path) % 2 == 0)
      fail(where + ": even length " + std::to_string(path_length(path)));
    if (f.strong)
      for (std::size_t i = 1; i + 1 < path.size(); ++i)
        if (terminals.contains(path[i]))
          fail(where + ": terminal " + std::to_string(path[i]) + " is an interior vertex");
  }
  report.accepted = report.violations.empty();
  return report;
}

std::optional<ImmersionCertificate> find_clique_immersion(const Graph &g, int t, ImmersionFlags f) {
  return ImmersionSearch(g, t, f).run();
}

MaxImmersion max_clique_immersion(const Graph &g, ImmersionFlags f) {
  if (g.order() == 0) throw degenerate_input("maximum immersion of the empty graph");
  MaxImmersion best{0, clique_certificate(maximum_clique(g))};
  best.t_max = best.witness.t;
  for (int t = best.t_max + 1; t <= g.order(); ++t) {
    auto found = find_clique_immersion(g, t, f);
    if (!found) break;
    best = {t, std::move(*found)};
  }
  return best;
}

VertexSet minimize_support(const Graph &g, int t, ImmersionFlags f) {
  if (!find_clique_immersion(g, t, f))
    throw no_immersion("graph has no " + to_string(f) + " K_" + std::to_string(t) + "-immersion");
  VertexSet support = g.vertices();
  bool removed = true;
  while (removed) {
    removed = false;
    for (int v = g.order() - 1; v >= 0; --v) {
      if (!support.contains(v)) continue;
      VertexSet trial = support - VertexSet::single(v);
      if (find_clique_immersion(induced_subgraph(g, trial).graph, t, f)) {
        support = trial;
        removed = true;
        break;
      }
    }
  }
  return support;
}

nlohmann::ordered_json certificate_to_json(const ImmersionCertificate &c, ImmersionFlags f) {
  nlohmann::ordered_json j;
  j["t"] = c.t;
  j["terminals"] = c.terminals;
  nlohmann::ordered_json paths = nlohmann::ordered_json::object();
  for (const auto &[key, path] : c.paths) paths[pair_key(key.first, key.second)] = path;
  j["paths"] = paths;
  j["flags"] = {{"strong", f.strong}, {"odd", f.odd}};
  return j;
}

std::pair<ImmersionCertificate, ImmersionFlags> certificate_from_json(const nlohmann::json &j) {
  try {
    ImmersionCertificate c;
    c.t = j.at("t").get<int>();
    c.terminals = j.at("terminals").get<std::vector<int>>();
    for (const auto &[key, value] : j.at("paths").items()) {
      auto comma = key.find(',');
      if (comma == std::string::npos) throw malformed_certificate("pair key '" + key + "' lacks a comma");
      int i = -1, k = -1;
      auto first = std::from_chars(key.data(), key.data() + comma, i);
      auto second = std::from_chars(key.data() + comma + 1, key.data() + key.size(), k);
      if (first.ec != std::errc{} || first.ptr != key.data() + comma || second.ec != std::errc{} ||
          second.ptr != key.data() + key.size())
        throw malformed_certificate("pair key '" + key + "' is not of the form i,j");
      if (!c.paths.emplace(TerminalPair{i, k}, value.get<Path>()).second)
        throw malformed_certificate("duplicate pair key '" + key + "'");
    }
    ImmersionFlags f;
    if (j.contains("flags")) {
      f.strong = j["flags"].value("strong", false);
      f.odd = j["flags"].value("odd", false);
    }
    return {c, f};
  } catch (const nlohmann::json::exception &e) {
    throw malformed_certificate(std::string("certificate JSON: ") + e.what());
  }
}

} // namespace oddimm
