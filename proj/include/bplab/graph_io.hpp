#ifndef BPLAB_GRAPH_IO_HPP
#define BPLAB_GRAPH_IO_HPP

#include <string>
#include <string_view>

#include "bplab/graph.hpp"

namespace bplab {

enum class GraphFormat { edge_list, graph6 };

// edge_list: first line n, then one "u v" pair per line, 0-based.
// graph6: standard encoding, n <= 62.
// Malformed input raises ParseError carrying the byte offset.
Graph parse_graph(std::string_view text, GraphFormat format);
std::string serialize_graph(const Graph& g, GraphFormat format);

} // namespace bplab

#endif
