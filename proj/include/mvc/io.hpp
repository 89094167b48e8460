#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mvc/graph.hpp"

namespace mvc {

// A graph plus the external labels its vertices carried on ingestion;
// labels[i] is the label of internal vertex i.
struct LabeledGraph {
    Graph graph;
    std::vector<std::string> labels;

    const std::string& label(int v) const { return labels[v]; }
    int require(const std::string& label) const;  // throws GraphError if unknown
};

// Edge-list text format: `n m` header, then m lines `u v`. Blank lines and
// `#` comments are skipped. Integer tokens in [0,n) are used as ids directly;
// otherwise labels are mapped in order of first appearance.
LabeledGraph read_edge_list(std::istream& in);

// DIMACS-like: `c` comments, `p edge n m`, then `e u v` with 1-indexed ids.
LabeledGraph read_dimacs(std::istream& in);

LabeledGraph read_graph_file(const std::string& path, const std::string& format);
LabeledGraph read_graph_stream(std::istream& in, const std::string& format);

void write_edge_list(std::ostream& out, const Graph& g,
                     const std::vector<std::string>* labels = nullptr,
                     const std::vector<std::string>* comment_lines = nullptr);

std::vector<std::string> identity_labels(int n);

}  // namespace mvc
