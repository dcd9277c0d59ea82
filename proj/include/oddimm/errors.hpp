#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace oddimm {

// Base for every error raised by the library. Callers that only care about
// "bad input vs. everything else" can catch this one type.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct parse_error : error {
  parse_error(const std::string &what, std::size_t offset)
      : error(what + " at byte " + std::to_string(offset)), offset(offset) {}
  std::size_t offset;
};

struct unsupported_size : error {
  using error::error;
};

struct degenerate_input : error {
  using error::error;
};

struct precondition_error : error {
  using error::error;
};

// Raised when the input graph has an independent set of size three but the
// operation requires alpha <= 2.
struct independent_triple_error : precondition_error {
  independent_triple_error(std::array<int, 3> triple)
      : precondition_error("graph has independent triple {" +
                           std::to_string(triple[0]) + "," +
                           std::to_string(triple[1]) + "," +
                           std::to_string(triple[2]) + "}"),
        witness(triple) {}
  std::array<int, 3> witness;
};

struct malformed_certificate : error {
  using error::error;
};

struct no_immersion : error {
  using error::error;
};

struct inapplicable_check : error {
  using error::error;
};

} // namespace oddimm
