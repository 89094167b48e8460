#include "mvc/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace mvc {

namespace {

bool parse_int(const std::string& tok, int& out) {
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    return ec == std::errc() && ptr == tok.data() + tok.size();
}

// Next non-blank, non-comment line split into tokens; false at EOF.
bool next_tokens(std::istream& in, std::vector<std::string>& toks) {
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        toks.clear();
        std::string t;
        while (ls >> t) toks.push_back(t);
        if (toks.empty() || toks[0][0] == '#') continue;
        return true;
    }
    return false;
}

}  // namespace

int LabeledGraph::require(const std::string& l) const {
    for (int v = 0; v < static_cast<int>(labels.size()); ++v)
        if (labels[v] == l) return v;
    throw GraphError("unknown vertex label: " + l);
}

std::vector<std::string> identity_labels(int n) {
    std::vector<std::string> ls(n);
    for (int i = 0; i < n; ++i) ls[i] = std::to_string(i);
    return ls;
}

LabeledGraph read_edge_list(std::istream& in) {
    std::vector<std::string> toks;
    if (!next_tokens(in, toks)) throw GraphError("empty input");
    int n, m;
    if (toks.size() != 2 || !parse_int(toks[0], n) || !parse_int(toks[1], m) || n < 0 || m < 0)
        throw GraphError("expected header line `n m`");

    std::vector<std::pair<std::string, std::string>> raw;
    for (int i = 0; i < m; ++i) {
        if (!next_tokens(in, toks) || toks.size() != 2)
            throw GraphError("expected edge line `u v` (" + std::to_string(m) +
                             " edges declared)");
        raw.emplace_back(toks[0], toks[1]);
    }

    // All-integer files use the ids verbatim (range-checked); any
    // non-integer token switches the whole file to label mode.
    bool numeric = true;
    for (const auto& [a, b] : raw) {
        int u, v;
        if (!parse_int(a, u) || !parse_int(b, v)) {
            numeric = false;
            break;
        }
    }

    std::vector<Edge> edges;
    std::vector<std::string> labels;
    if (numeric) {
        for (const auto& [a, b] : raw) {
            int u, v;
            parse_int(a, u);
            parse_int(b, v);
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw GraphError("vertex id out of range: " + a + " " + b);
            edges.push_back(make_edge(u, v));
        }
        labels = identity_labels(n);
    } else {
        std::map<std::string, int> id;
        auto intern = [&](const std::string& l) {
            auto it = id.find(l);
            if (it != id.end()) return it->second;
            if (static_cast<int>(id.size()) == n)
                throw GraphError("more than " + std::to_string(n) + " distinct labels");
            int v = static_cast<int>(id.size());
            id.emplace(l, v);
            labels.push_back(l);
            return v;
        };
        for (const auto& [a, b] : raw) edges.push_back(make_edge(intern(a), intern(b)));
        while (static_cast<int>(labels.size()) < n)
            labels.push_back("_v" + std::to_string(labels.size()));
    }
    return {Graph::build(n, std::move(edges)), std::move(labels)};
}

LabeledGraph read_dimacs(std::istream& in) {
    std::string line;
    int n = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string kind;
        if (!(ls >> kind) || kind == "c") continue;
        if (kind == "p") {
            std::string fmt;
            int m;
            if (!(ls >> fmt >> n >> m) || n < 0) throw GraphError("bad DIMACS problem line");
        } else if (kind == "e") {
            int u, v;
            if (!(ls >> u >> v)) throw GraphError("bad DIMACS edge line");
            if (n < 0) throw GraphError("DIMACS edge before problem line");
            if (u < 1 || v < 1 || u > n || v > n)
                throw GraphError("DIMACS vertex id out of range");
            edges.push_back(make_edge(u - 1, v - 1));
        } else {
            throw GraphError("unknown DIMACS line kind: " + kind);
        }
    }
    if (n < 0) throw GraphError("missing DIMACS problem line");
    return {Graph::build(n, std::move(edges)), identity_labels(n)};
}

LabeledGraph read_graph_stream(std::istream& in, const std::string& format) {
    if (format == "edge" || format.empty()) return read_edge_list(in);
    if (format == "dimacs") return read_dimacs(in);
    throw GraphError("unknown format: " + format);
}

LabeledGraph read_graph_file(const std::string& path, const std::string& format) {
    std::ifstream in(path);
    if (!in) throw GraphError("cannot open " + path);
    return read_graph_stream(in, format);
}

void write_edge_list(std::ostream& out, const Graph& g,
                     const std::vector<std::string>* labels,
                     const std::vector<std::string>* comment_lines) {
    if (comment_lines)
        for (const auto& c : *comment_lines) out << "# " << c << "\n";
    out << g.vertex_count() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) {
        if (labels)
            out << (*labels)[u] << " " << (*labels)[v] << "\n";
        else
            out << u << " " << v << "\n";
    }
}

}  // namespace mvc
