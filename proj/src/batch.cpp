#include "oddimm/batch.hpp"
#include "oddimm/errors.hpp"
#include "oddimm/family.hpp"

#include <charconv>
#include <exception>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace oddimm {

namespace {

const std::vector<std::string> stages{"alpha", "chi", "t_max_plain", "t_max_strong_odd", "appendix"};

std::string csv_field(const std::string &s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string format_ms(double ms) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(3);
  os << ms;
  return os.str();
}

long parse_number(const std::string &text, const std::string &what) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw precondition_error("generator field " + what + "='" + text + "' is not an integer");
  return value;
}

nlohmann::ordered_json row_json(const CheckReport &r, bool timings) {
  nlohmann::ordered_json j;
  j["graph6"] = r.graph6;
  j["n"] = r.n;
  j["alpha"] = r.alpha;
  j["chi"] = r.chi;
  j["t_max_plain"] = r.t_max_plain;
  j["t_max_strong_odd"] = r.t_max_strong_odd;
  nlohmann::ordered_json bounds = nlohmann::ordered_json::object();
  for (const auto &b : r.bounds) {
    nlohmann::ordered_json entry;
    if (b.verdict == Verdict::not_applicable)
      entry["bound_value"] = nullptr;
    else
      entry["bound_value"] = b.bound_value;
    if (b.verdict == Verdict::pass || b.verdict == Verdict::fail)
      entry["holds"] = b.verdict == Verdict::pass;
    else
      entry["holds"] = nullptr;
    entry["status"] = to_string(b.verdict);
    bounds[to_string(b.check)] = entry;
  }
  j["bounds"] = bounds;
  if (timings) {
    nlohmann::ordered_json t = nlohmann::ordered_json::object();
    for (const auto &[stage, ms] : r.runtime_ms) t[stage] = ms;
    j["runtime_ms"] = t;
  }
  return j;
}

} // namespace

std::vector<Graph> generate(const std::string &spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw precondition_error("generator spec '" + spec + "' lacks ':'");
  const std::string family = spec.substr(0, colon);
  std::map<std::string, long> fields;
  std::stringstream rest(spec.substr(colon + 1));
  std::string item;
  while (std::getline(rest, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw precondition_error("generator field '" + item + "' lacks '='");
    fields[item.substr(0, eq)] = parse_number(item.substr(eq + 1), item.substr(0, eq));
  }
  auto need = [&](const std::string &key) {
    auto it = fields.find(key);
    if (it == fields.end()) throw precondition_error("generator spec '" + spec + "' needs " + key + "=");
    return it->second;
  };
  const int n = static_cast<int>(need("n"));
  if (family == "alpha2") return enumerate_alpha_le2(n);
  if (family == "all") return enumerate_all_graphs(n);
  if (family == "alpha3") {
    std::vector<Graph> out;
    for (Graph &g : enumerate_all_graphs(n))
      if (independence_number(g) == 3) out.push_back(std::move(g));
    return out;
  }
  if (family == "alpha2-random") {
    long seed = fields.contains("seed") ? fields["seed"] : 0;
    return sample_alpha_le2(n, static_cast<int>(need("count")), static_cast<std::uint64_t>(seed));
  }
  throw precondition_error("unknown graph family '" + family + "'");
}

std::vector<Graph> read_graph6_stream(std::istream &in) {
  std::vector<Graph> out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      out.push_back(parse_graph6(line));
    } catch (const parse_error &e) {
      throw parse_error("line " + std::to_string(number) + ": " + e.what(), e.offset);
    }
  }
  return out;
}

std::vector<CheckReport> evaluate_serial(const std::vector<Graph> &graphs, const std::vector<Check> &checks) {
  std::vector<CheckReport> rows;
  rows.reserve(graphs.size());
  for (const Graph &g : graphs) rows.push_back(evaluate(g, checks));
  return rows;
}

std::vector<CheckReport> evaluate_parallel(const std::vector<Graph> &graphs, const std::vector<Check> &checks,
                                           int workers) {
  std::vector<CheckReport> rows(graphs.size());
  std::exception_ptr failure;
  const long count = static_cast<long>(graphs.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
#endif
  for (long i = 0; i < count; ++i) {
    try {
      rows[i] = evaluate(graphs[i], checks);
    } catch (...) {
#ifdef _OPENMP
#pragma omp critical(oddimm_batch_failure)
#endif
      if (!failure) failure = std::current_exception();
    }
  }
  (void)workers;
  if (failure) std::rethrow_exception(failure);
  return rows;
}

std::string to_csv(const std::vector<CheckReport> &rows, const std::vector<Check> &checks, bool timings) {
  std::string out = "graph6,n,alpha,chi,t_max_plain,t_max_strong_odd";
  for (Check c : checks) out += "," + to_string(c) + "_bound," + to_string(c) + "_holds";
  if (timings)
    for (const auto &s : stages) out += ",ms_" + s;
  out += "\r\n";
  for (const auto &r : rows) {
    out += csv_field(r.graph6) + "," + std::to_string(r.n) + "," + std::to_string(r.alpha) + "," +
           std::to_string(r.chi) + "," + std::to_string(r.t_max_plain) + "," + std::to_string(r.t_max_strong_odd);
    for (const auto &b : r.bounds) {
      out += ",";
      if (b.verdict != Verdict::not_applicable) out += std::to_string(b.bound_value);
      out += "," + to_string(b.verdict);
    }
    if (timings)
      for (const auto &s : stages) {
        auto it = r.runtime_ms.find(s);
        out += "," + (it == r.runtime_ms.end() ? std::string{} : format_ms(it->second));
      }
    out += "\r\n";
  }
  return out;
}

nlohmann::ordered_json to_json(const std::vector<CheckReport> &rows, const std::vector<Check> &checks,
                               bool timings) {
  nlohmann::ordered_json j;
  j["checks"] = nlohmann::ordered_json::array();
  for (Check c : checks) j["checks"].push_back(to_string(c));
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto &r : rows) j["rows"].push_back(row_json(r, timings));
  return j;
}

nlohmann::ordered_json quarantine_json(const std::vector<CheckReport> &rows) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto &r : rows) {
    if (!r.any_failure()) continue;
    nlohmann::ordered_json entry;
    entry["graph6"] = r.graph6;
    entry["failed"] = nlohmann::ordered_json::array();
    for (const auto &b : r.bounds)
      if (b.verdict == Verdict::fail) entry["failed"].push_back(to_string(b.check));
    entry["report"] = row_json(r, false);
    entry["coloring"] = {{"k", r.coloring.k}, {"colors", r.coloring.colors}};
    if (r.n > 0) {
      entry["plain_witness"] = certificate_to_json(r.plain_witness, ImmersionFlags::plain());
      entry["strong_odd_witness"] = certificate_to_json(r.strong_odd_witness, ImmersionFlags::strong_odd());
    }
    if (r.appendix_certificate)
      entry["appendix_certificate"] = certificate_to_json(*r.appendix_certificate, ImmersionFlags::strong_odd());
    out.push_back(entry);
  }
  return out;
}

int run_batch(const BatchConfig &config, std::ostream &err) {
  if (config.checks.empty()) {
    err << "error: no checks requested\n";
    return 2;
  }
  if (config.workers < 1) {
    err << "error: workers must be at least 1\n";
    return 2;
  }

  std::vector<Graph> graphs;
  try {
    if (!config.input_path.empty()) {
      if (config.input_path == "-") {
        graphs = read_graph6_stream(std::cin);
      } else {
        std::ifstream in(config.input_path);
        if (!in) {
          err << "error: cannot read " << config.input_path << "\n";
          return 2;
        }
        graphs = read_graph6_stream(in);
      }
    } else if (!config.generator.empty()) {
      graphs = generate(config.generator);
    } else {
      err << "error: no input file or generator given\n";
      return 2;
    }
  } catch (const error &e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  std::vector<CheckReport> rows = config.workers == 1 ? evaluate_serial(graphs, config.checks)
                                                      : evaluate_parallel(graphs, config.checks, config.workers);

  std::string body = config.format == OutputFormat::csv ? to_csv(rows, config.checks, config.timings)
                                                        : to_json(rows, config.checks, config.timings).dump(2) + "\n";
  if (config.out_path.empty() || config.out_path == "-") {
    std::cout << body;
  } else {
    std::ofstream out(config.out_path, std::ios::binary);
    if (!out) {
      err << "error: cannot write " << config.out_path << "\n";
      return 2;
    }
    out << body;
  }

  bool failed = false;
  for (const auto &r : rows) failed = failed || r.any_failure();
  if (failed) {
    std::string path = config.quarantine_path;
    if (path.empty()) path = (config.out_path.empty() || config.out_path == "-" ? "oddimm" : config.out_path) + ".quarantine.json";
    std::ofstream q(path, std::ios::binary);
    q << quarantine_json(rows).dump(2) << "\n";
    for (const auto &r : rows)
      for (const auto &b : r.bounds)
        if (b.verdict == Verdict::fail)
          err << "VIOLATION: " << to_string(b.check) << " fails on " << r.graph6 << " (quarantined in " << path
              << ")\n";
    return 1;
  }
  return 0;
}

} // namespace oddimm
