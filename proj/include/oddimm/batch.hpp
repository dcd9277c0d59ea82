#pragma once

#include "oddimm/checks.hpp"
#include "oddimm/graph.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

namespace oddimm {

enum class OutputFormat { csv, json };

struct BatchConfig {
  std::string input_path; // graph6 file, one graph per line; "-" reads stdin
  std::string generator;  // e.g. "alpha2:n=6"; used when input_path is empty
  std::vector<Check> checks;
  int workers = 1;
  std::string out_path = "-"; // "-" writes to stdout
  OutputFormat format = OutputFormat::csv;
  bool timings = false; // append per-stage runtimes (breaks byte-identical output)
  std::string quarantine_path; // defaults to <out_path>.quarantine.json
};

// Generator specs:
//   alpha2:n=<k>                      every alpha <= 2 class on k vertices
//   alpha3:n=<k>                      every alpha == 3 class on k vertices
//   all:n=<k>                         every class on k vertices
//   alpha2-random:n=<k>,count=<c>,seed=<s>
// Throws precondition_error on a malformed spec.
std::vector<Graph> generate(const std::string &spec);

std::vector<Graph> read_graph6_stream(std::istream &in);

// Reference kernel: one graph after another.
std::vector<CheckReport> evaluate_serial(const std::vector<Graph> &graphs, const std::vector<Check> &checks);
// OpenMP fan-out over graphs; rows come back in input order.
std::vector<CheckReport> evaluate_parallel(const std::vector<Graph> &graphs, const std::vector<Check> &checks,
                                           int workers);

std::string to_csv(const std::vector<CheckReport> &rows, const std::vector<Check> &checks, bool timings = false);
nlohmann::ordered_json to_json(const std::vector<CheckReport> &rows, const std::vector<Check> &checks,
                               bool timings = false);
nlohmann::ordered_json quarantine_json(const std::vector<CheckReport> &rows);

// 0 when every applicable check holds, 1 on any failure, 2 on input error.
int run_batch(const BatchConfig &config, std::ostream &err);

} // namespace oddimm
