#pragma once

#include <optional>
#include <string>

#include "expansio/expansion.hpp"
#include "expansio/free_complex.hpp"
#include "expansio/ideal.hpp"

namespace expansio {

// One problem instance, as read from the ideal text format:
//   ring: x1 x2 ... xn
//   ideal: m1, m2, ..., mk
//   tuple: i1 i2 ... in        (optional)
// Blank lines and '#' comments are ignored.
struct ProblemInstance {
  RingDescriptor ring;
  MonomialIdeal ideal;
  std::optional<ExpansionTuple> tuple;
};

ProblemInstance parse_problem(const std::string& text);
ProblemInstance load_problem(const std::string& path);

std::string format_ideal(const MonomialIdeal& I);
std::string format_problem(const ProblemInstance& p);

// Simple graph input: optional `vertices: n` line, then one `u v` edge per
// line (1-based labels). Self-loops are rejected.
struct Graph {
  int nvertices = 0;
  std::vector<std::pair<int, int>> edges;  // 0-based, u < v
};
Graph parse_graph(const std::string& text);
MonomialIdeal edge_ideal(const Graph& g);
// Edge ideal of the graph with vertex j duplicated tuple[j] times:
// sum of P_u P_v over the edges, in the flat ring.
MonomialIdeal duplicated_edge_ideal(const Graph& g, const ExpandedRing& er);

std::string complex_to_json(const ChainComplex& C);
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace expansio
