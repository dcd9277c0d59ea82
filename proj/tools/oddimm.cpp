#include "oddimm/batch.hpp"
#include "oddimm/checks.hpp"
#include "oddimm/coloring.hpp"
#include "oddimm/constructive.hpp"
#include "oddimm/errors.hpp"
#include "oddimm/graph.hpp"
#include "oddimm/immersion.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace oddimm;

namespace {

std::vector<Check> parse_checks(const std::string &list) {
  std::vector<Check> out;
  std::stringstream ss(list);
  std::string name;
  while (std::getline(ss, name, ',')) {
    auto c = parse_check(name);
    if (!c) throw CLI::ValidationError("--checks", "unknown check '" + name + "'");
    out.push_back(*c);
  }
  return out;
}

void print(const nlohmann::ordered_json &j) { std::cout << j.dump() << "\n"; }

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Clique immersion certificates, searches and chromatic bound sweeps"};
  app.require_subcommand(1);
  int exit_code = 0;

  std::string g6;

  auto *chromatic = app.add_subcommand("chromatic", "exact chromatic number with a colouring");
  chromatic->add_option("graph6", g6, "graph in graph6 format")->required();
  chromatic->callback([&] {
    Graph g = parse_graph6(g6);
    auto result = chromatic_number(g);
    nlohmann::ordered_json j;
    j["chi"] = result.chi;
    j["colors"] = result.witness.colors;
    print(j);
  });

  auto *alpha = app.add_subcommand("alpha", "exact independence number");
  alpha->add_option("graph6", g6, "graph in graph6 format")->required();
  alpha->callback([&] {
    Graph g = parse_graph6(g6);
    VertexSet s = maximum_independent_set(g);
    nlohmann::ordered_json j;
    j["alpha"] = s.size();
    j["independent_set"] = s.to_vector();
    print(j);
  });

  auto *immersion = app.add_subcommand("immersion", "clique immersion search");
  immersion->require_subcommand(1);
  int t = 0;
  ImmersionFlags flags;
  auto *find = immersion->add_subcommand("find", "find a K_t-immersion");
  find->add_option("--t", t, "clique order")->required()->check(CLI::PositiveNumber);
  find->add_flag("--strong", flags.strong, "no terminal as an interior vertex");
  find->add_flag("--odd", flags.odd, "every path has odd length");
  find->add_option("graph6", g6, "graph in graph6 format")->required();
  find->callback([&] {
    Graph g = parse_graph6(g6);
    if (auto cert = find_clique_immersion(g, t, flags)) {
      print(certificate_to_json(*cert, flags));
    } else {
      std::cout << "null\n";
      exit_code = 1;
    }
  });
  auto *max = immersion->add_subcommand("max", "largest clique immersion");
  max->add_flag("--strong", flags.strong, "no terminal as an interior vertex");
  max->add_flag("--odd", flags.odd, "every path has odd length");
  max->add_option("graph6", g6, "graph in graph6 format")->required();
  max->callback([&] {
    Graph g = parse_graph6(g6);
    auto best = max_clique_immersion(g, flags);
    nlohmann::ordered_json j;
    j["t_max"] = best.t_max;
    j["certificate"] = certificate_to_json(best.witness, flags);
    print(j);
  });

  bool verbose = false;
  auto *third = app.add_subcommand("build-third", "constructive strong odd K_ceil(n/3) for alpha <= 2");
  third->add_flag("-v,--verbose", verbose, "trace each recursion step on stderr");
  third->add_option("graph6", g6, "graph in graph6 format")->required();
  third->callback([&] {
    Graph g = parse_graph6(g6);
    BuildTrace trace;
    if (verbose)
      trace = [](const BuildTraceStep &s) {
        std::cerr << "depth=" << s.depth << " n=" << s.n << " branch=" << to_string(s.branch) << " t=" << s.t
                  << "\n";
      };
    print(certificate_to_json(build_third_immersion(g, trace), ImmersionFlags::strong_odd()));
  });

  std::string cert_path;
  auto *verify = app.add_subcommand("verify", "check an immersion certificate");
  verify->add_option("--cert", cert_path, "certificate JSON file")->required();
  verify->add_option("graph6", g6, "graph in graph6 format")->required();
  verify->callback([&] {
    Graph g = parse_graph6(g6);
    std::ifstream in(cert_path);
    if (!in) throw precondition_error("cannot read " + cert_path);
    nlohmann::json raw;
    try {
      raw = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception &e) {
      throw malformed_certificate(std::string("invalid JSON: ") + e.what());
    }
    auto [cert, cert_flags] = certificate_from_json(raw);
    VerifyReport report = verify_certificate(g, cert, cert_flags);
    nlohmann::ordered_json j;
    j["accepted"] = report.accepted;
    j["flags"] = to_string(cert_flags);
    j["violations"] = report.violations;
    print(j);
    exit_code = report.accepted ? 0 : 1;
  });

  BatchConfig batch;
  std::string family = "alpha2";
  int n = 0;
  int count = 100;
  long seed = 0;
  std::string checks = "main,appendix,vergara";
  std::string format = "csv";
  auto *sweep = app.add_subcommand("sweep", "evaluate checks over a graph family or a graph6 file");
  sweep->add_option("--family", family, "alpha2 | alpha3 | all | alpha2-random");
  sweep->add_option("--n", n, "vertex count for generated families");
  sweep->add_option("--count", count, "samples for alpha2-random");
  sweep->add_option("--seed", seed, "seed for alpha2-random");
  sweep->add_option("--input", batch.input_path, "graph6 file instead of a generated family");
  sweep->add_option("--checks", checks, "comma-separated: main,appendix,vergara,alpha3");
  sweep->add_option("--out", batch.out_path, "output path, - for stdout");
  sweep->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  sweep->add_option("--workers", batch.workers, "parallel workers")->check(CLI::PositiveNumber);
  sweep->add_option("--quarantine", batch.quarantine_path, "where violating rows are dumped");
  sweep->add_flag("--timings", batch.timings, "append per-stage runtimes");
  sweep->callback([&] {
    batch.checks = parse_checks(checks);
    batch.format = format == "json" ? OutputFormat::json : OutputFormat::csv;
    if (batch.input_path.empty()) {
      if (n < 1) throw CLI::ValidationError("--n", "required for generated families");
      batch.generator = family + ":n=" + std::to_string(n);
      if (family == "alpha2-random")
        batch.generator += ",count=" + std::to_string(count) + ",seed=" + std::to_string(seed);
    }
    exit_code = run_batch(batch, std::cerr);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const no_immersion &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
