#pragma once

#include <gwemb/graph.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace gwemb {

// Text format:
//   n m
//   u v            (m lines, 0-based)
//   # label u text (optional, after the edges, one per vertex)
// Blank lines and other '#' lines are ignored.

auto parse_graph(std::string_view text) -> Graph;
/// Normalized text: deduplicated edge count, edges as "u v" with u < v in
/// lexicographic order, then one label line per vertex when labeled.
auto serialize_graph(const Graph & g) -> std::string;

auto read_graph_file(const std::string & path) -> Graph;
void write_graph_file(const std::string & path, const Graph & g);

/// One shading class for DOT export.
struct DotClass {
    std::string name;
    std::vector<VertexId> members;
    std::string fill; // any graphviz color; empty picks from a default palette
};

/// Undirected DOT document; classes must be pairwise disjoint.
auto to_dot(const Graph & g, const std::vector<DotClass> & classes = {}, std::string_view graph_name = "G")
    -> std::string;

} // namespace gwemb
