#include "censym/graph.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace censym {

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
    if (vertex_count_ < 1) throw PreconditionError("graph needs at least one vertex");
    std::set<std::pair<int, int>> seen;
    for (auto& [i, j] : edges_) {
        if (i == j) throw PreconditionError("loops are not allowed");
        if (i > j) std::swap(i, j);
        if (i < 1 || j > vertex_count_) throw PreconditionError("edge label out of range");
        if (!seen.insert({i, j}).second) throw PreconditionError("duplicate edge");
    }
    adj_.assign(static_cast<std::size_t>(vertex_count_) + 1, {});
    for (const auto& [i, j] : edges_) {
        adj_[static_cast<std::size_t>(i)].push_back(j);
        adj_[static_cast<std::size_t>(j)].push_back(i);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool Graph::has_edge(int i, int j) const {
    if (i < 1 || j < 1 || i > vertex_count_ || j > vertex_count_) return false;
    const auto& nb = adj_[static_cast<std::size_t>(i)];
    return std::binary_search(nb.begin(), nb.end(), j);
}

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int declared = 0;
    std::vector<std::pair<int, int>> edges;
    int max_label = 0;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "vertices") {
            if (!(ls >> declared) || declared < 1) throw ParseError("bad vertices header");
            continue;
        }
        int i = 0, j = 0;
        try {
            i = std::stoi(first);
        } catch (const std::exception&) {
            throw ParseError("bad edge line: " + line);
        }
        if (!(ls >> j)) throw ParseError("bad edge line: " + line);
        std::string rest;
        if (ls >> rest) throw ParseError("bad edge line (extra tokens): " + line);
        if (i < 1 || j < 1) throw ParseError("vertex labels are 1-indexed");
        edges.emplace_back(i, j);
        max_label = std::max({max_label, i, j});
    }
    int vc = declared > 0 ? declared : max_label;
    if (vc == 0) throw ParseError("graph file has no edges and no vertices header");
    if (declared > 0 && max_label > declared) throw ParseError("edge label exceeds declared vertex count");
    try {
        return Graph(vc, std::move(edges));
    } catch (const Error& e) {
        throw ParseError(std::string("invalid graph: ") + e.what());
    }
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open graph file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

Graph wheel_graph(int d) {
    if (d < 4) throw PreconditionError("wheel graph needs d >= 4");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < d - 1; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(1, d - 1);
    for (int i = 1; i < d; ++i) edges.emplace_back(i, d);
    return Graph(d, std::move(edges));
}

Graph cycle_graph(int n) {
    if (n < 3) throw PreconditionError("cycle needs n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(1, n);
    return Graph(n, std::move(edges));
}

Graph path_graph(int n) {
    if (n < 2) throw PreconditionError("path needs n >= 2");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, std::move(edges));
}

Graph complete_graph(int n) {
    if (n < 2) throw PreconditionError("complete graph needs n >= 2");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
    return Graph(n, std::move(edges));
}

Graph complete_bipartite(int p, int q) {
    if (p < 1 || q < 1) throw PreconditionError("complete bipartite needs p, q >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= p; ++i)
        for (int j = 1; j <= q; ++j) edges.emplace_back(i, p + j);
    return Graph(p + q, std::move(edges));
}

Graph complete_multipartite(const std::vector<int>& sizes) {
    if (sizes.size() < 2) throw PreconditionError("need at least two parts");
    std::vector<int> start(sizes.size() + 1, 1);
    for (std::size_t k = 0; k < sizes.size(); ++k) {
        if (sizes[k] < 1) throw PreconditionError("part sizes must be >= 1");
        start[k + 1] = start[k] + sizes[k];
    }
    int vc = start.back() - 1;
    std::vector<std::pair<int, int>> edges;
    for (std::size_t a = 0; a < sizes.size(); ++a)
        for (std::size_t b = a + 1; b < sizes.size(); ++b)
            for (int i = start[a]; i < start[a + 1]; ++i)
                for (int j = start[b]; j < start[b + 1]; ++j) edges.emplace_back(i, j);
    return Graph(vc, std::move(edges));
}

Graph graph_from_family(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos) throw ParseError("family spec must look like wheel:6");
    std::string name = spec.substr(0, colon);
    std::string args = spec.substr(colon + 1);
    auto parse_int = [&](const std::string& s) {
        try {
            return std::stoi(s);
        } catch (const std::exception&) {
            throw ParseError("bad family parameter: " + s);
        }
    };
    if (name == "wheel") return wheel_graph(parse_int(args));
    if (name == "cycle") return cycle_graph(parse_int(args));
    if (name == "path") return path_graph(parse_int(args));
    if (name == "complete") return complete_graph(parse_int(args));
    if (name == "bipartite") {
        auto comma = args.find(',');
        if (comma == std::string::npos) throw ParseError("bipartite family needs p,q");
        return complete_bipartite(parse_int(args.substr(0, comma)), parse_int(args.substr(comma + 1)));
    }
    throw ParseError("unknown graph family: " + name);
}

}  // namespace censym
