#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "metrep/distance_vector.hpp"
#include "metrep/equivalence.hpp"
#include "metrep/graph.hpp"
#include "metrep/oracle.hpp"
#include "metrep/realizability.hpp"
#include "metrep/realization.hpp"

// Text formats. Parse failures throw Error(kParse) with a line number where
// one applies.
namespace metrep::io {

// Graph file: "p <vertex_count>" then "e <u> <v>" lines, 0-based labels.
// Blank lines and '#' comments are ignored.
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::string& path);
std::string format_graph(const Graph& g);

// "0,7" -> (0, 7).
OrderedVertexSet parse_vertex_list(std::string_view text);
std::string format_vertex_list(const OrderedVertexSet& w);

// {"n": 2, "vectors": [[0,2],[2,0]]}. Duplicates are rejected. Extra keys are
// ignored, so a canonical sidecar file also parses as a vector set.
VectorSet parse_vector_set(std::string_view json_text);
VectorSet read_vector_set_file(const std::string& path);
std::string format_vector_set(const VectorSet& s);

// Sidecar for a realization whose vertex labels index `vertices`:
// {"n": .., "vectors": [label order], "landmarks": [labels]}.
std::string format_realization_sidecar(const Realization& r);

std::string format_witness(const Witness& w);
Witness parse_witness(std::string_view json_text);
std::string format_edge_deletion(const EdgeDeletion& e);

// {"class_count": k, "classes": [[["(0,1)","(1,1)"], ...], ...]};
// count_only drops "classes".
std::string format_class_report(const ClassReport& report, bool count_only);

std::string format_edge_set(const VectorEdgeSet& edges);

struct DotOptions {
  /// Landmark vectors, drawn filled.
  std::vector<DistanceVector> landmarks;
  /// Pin n = 2 vertices at (x1, -x2).
  bool grid_layout = true;
};

// One node per vector labeled "(x1,...,xn)".
std::string format_dot(const VectorSet& vertices, const VectorEdgeSet& edges,
                       const DotOptions& options);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view contents);

}  // namespace metrep::io
