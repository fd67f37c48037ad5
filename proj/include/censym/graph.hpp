#pragma once

#include <string>
#include <utility>
#include <vector>

#include "censym/errors.hpp"

namespace censym {

/// Finite simple graph with 1-indexed vertices and an ordered edge list.
/// Edge order matters: it fixes the column order of the incidence
/// configurations and hence the variable numbering of the toric ideals.
class Graph {
public:
    Graph(int vertex_count, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return vertex_count_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }

    bool has_edge(int i, int j) const;
    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }

private:
    int vertex_count_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;  // 1-indexed; adj_[0] unused
};

/// Graph file format: lines `i j` (1-indexed, i != j), `#` comments, optional
/// `vertices k` header; vertex count defaults to the maximum label.
Graph parse_graph(const std::string& text);
Graph read_graph_file(const std::string& path);

/// Wheel on [d]: rim cycle 1..d-1 plus hub d joined to every rim vertex.
Graph wheel_graph(int d);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite(int p, int q);
/// Complete multipartite graph on consecutive vertex blocks of given sizes.
Graph complete_multipartite(const std::vector<int>& sizes);

/// Named families for the CLI: "wheel:d", "cycle:n", "path:n", "complete:n",
/// "bipartite:p,q".
Graph graph_from_family(const std::string& spec);

}  // namespace censym
