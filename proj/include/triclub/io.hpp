#pragma once

#include <istream>
#include <string>
#include <unordered_map>

#include "triclub/graph.hpp"
#include "triclub/treedecomp.hpp"

namespace triclub {

struct ParseError : std::runtime_error {
    int line;
    ParseError(const std::string& msg, int line_no)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
};

enum class GraphFormat { edge_list, dimacs, pace_gr };

GraphFormat format_from_name(const std::string& name);

struct ParsedGraph {
    Graph graph;
    std::vector<std::string> labels;                     // dense id -> input label
    std::unordered_map<std::string, int> id_of_label;    // inverse
};

/// edge-list: one "u v" pair per line, '#' comments, labels are arbitrary tokens
///   assigned dense ids in first-appearance order.
/// dimacs: "c" comments, "p edge <n> <m>" header, "e u v" lines, 1-indexed.
/// pace-gr: "c" comments, "p tw <n> <m>" header, "u v" lines, 1-indexed.
/// Duplicate edges are collapsed; self-loops are rejected with a ParseError.
ParsedGraph parse_graph(std::istream& in, GraphFormat format);
ParsedGraph parse_graph_string(const std::string& text, GraphFormat format);

std::string write_graph(const Graph& g, const std::vector<std::string>& labels,
                        GraphFormat format);

/// PACE .td: "c" comments, "s td <#bags> <width+1> <n>" header, "b <id> <v...>"
/// bag lines, then tree edges. Bag vertices are resolved through the graph's
/// label table. Validation against the graph is the caller's job.
TreeDecomposition parse_td(std::istream& in, const ParsedGraph& graph);
TreeDecomposition parse_td_string(const std::string& text, const ParsedGraph& graph);

std::string write_td(const TreeDecomposition& td, const std::vector<std::string>& labels);

/// DOT rendering of the subgraph induced by a vertex set (witness export).
std::string write_dot(const Graph& g, const std::vector<std::string>& labels, const VertexSet& s);

}  // namespace triclub
