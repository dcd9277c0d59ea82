#pragma once

#include "oddimm/graph.hpp"

#include <optional>
#include <vector>

namespace oddimm {

// Proper colouring using every colour 0..k-1 at least once.
struct ColoringCertificate {
  int k = 0;
  std::vector<int> colors;
};

// (X1, X2) with every X1-X2 pair adjacent.
struct JoinPartition {
  VertexSet x1;
  VertexSet x2;
};

struct ChromaticResult {
  int chi = 0;
  ColoringCertificate witness;
};

// Checks properness and that the colours in use are exactly 0..k-1.
bool is_proper_coloring(const Graph &g, const ColoringCertificate &c);

// Relabels colours so their first occurrences appear in increasing vertex order.
ColoringCertificate normalize_coloring(std::vector<int> colors);

std::optional<ColoringCertificate> is_k_colorable(const Graph &g, int k);
ChromaticResult chromatic_number(const Graph &g);
bool is_vertex_critical(const Graph &g, int k);

// Present iff the complement of g is disconnected; X1 is the complement
// component containing vertex 0.
std::optional<JoinPartition> find_join_partition(const Graph &g);
bool is_join_partition(const Graph &g, const JoinPartition &jp);

} // namespace oddimm
