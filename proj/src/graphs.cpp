#include "censym/graphs.hpp"

#include <algorithm>
#include <deque>

#include "censym/configs.hpp"

namespace censym {

bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    std::deque<int> queue{1};
    seen[1] = 1;
    int count = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        ++count;
        for (int w : g.neighbors(v))
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                queue.push_back(w);
            }
    }
    return count == n;
}

std::optional<Bipartition> is_bipartite(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(static_cast<std::size_t>(n) + 1, 0);
    for (int root = 1; root <= n; ++root) {
        if (color[static_cast<std::size_t>(root)] != 0) continue;
        color[static_cast<std::size_t>(root)] = 1;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int w : g.neighbors(v)) {
                auto& cw = color[static_cast<std::size_t>(w)];
                if (cw == 0) {
                    cw = -color[static_cast<std::size_t>(v)];
                    queue.push_back(w);
                } else if (cw == color[static_cast<std::size_t>(v)]) {
                    return std::nullopt;
                }
            }
        }
    }
    Bipartition parts;
    for (int v = 1; v <= n; ++v)
        (color[static_cast<std::size_t>(v)] == 1 ? parts.part1 : parts.part2).push_back(v);
    return parts;
}

namespace {

// Simple-cycle backtracking. Canonical form: the cycle starts at its
// smallest vertex and runs toward the smaller of that vertex's two cycle
// neighbors, so each cycle is emitted exactly once.
void cycles_from(const Graph& g, int start, std::vector<int>& path, std::vector<char>& on_path,
                 std::vector<std::vector<int>>& out) {
    int v = path.back();
    for (int w : g.neighbors(v)) {
        if (w == start && path.size() >= 3) {
            if (path[1] < path.back()) out.push_back(path);
            continue;
        }
        if (w <= start || on_path[static_cast<std::size_t>(w)]) continue;
        on_path[static_cast<std::size_t>(w)] = 1;
        path.push_back(w);
        cycles_from(g, start, path, on_path, out);
        path.pop_back();
        on_path[static_cast<std::size_t>(w)] = 0;
    }
}

}  // namespace

std::vector<std::vector<int>> all_simple_cycles(const Graph& g, int size_limit) {
    if (g.vertex_count() > size_limit)
        throw SizeLimitError("graph exceeds the exhaustive cycle-search bound");
    std::vector<std::vector<int>> out;
    std::vector<char> on_path(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
    for (int s = 1; s <= g.vertex_count(); ++s) {
        std::vector<int> path{s};
        on_path[static_cast<std::size_t>(s)] = 1;
        cycles_from(g, s, path, on_path, out);
        on_path[static_cast<std::size_t>(s)] = 0;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<OddCyclePair> find_disjoint_odd_cycles(const Graph& g, int size_limit) {
    auto cycles = all_simple_cycles(g, size_limit);
    std::vector<std::vector<int>> odd;
    for (auto& c : cycles)
        if (c.size() % 2 == 1) odd.push_back(std::move(c));
    std::vector<std::vector<char>> marks;
    marks.reserve(odd.size());
    for (const auto& c : odd) {
        std::vector<char> m(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
        for (int v : c) m[static_cast<std::size_t>(v)] = 1;
        marks.push_back(std::move(m));
    }
    for (std::size_t i = 0; i < odd.size(); ++i)
        for (std::size_t j = i + 1; j < odd.size(); ++j) {
            bool disjoint = true;
            for (int v : odd[j])
                if (marks[i][static_cast<std::size_t>(v)]) {
                    disjoint = false;
                    break;
                }
            if (disjoint) return OddCyclePair{odd[i], odd[j], true};
        }
    return std::nullopt;
}

bool disjoint_odd_cycles_bridged(const Graph& g, int size_limit) {
    if (!is_connected(g)) throw NotConnectedError();
    auto cycles = all_simple_cycles(g, size_limit);
    std::vector<std::vector<int>> odd;
    for (auto& c : cycles)
        if (c.size() % 2 == 1) odd.push_back(std::move(c));
    for (std::size_t i = 0; i < odd.size(); ++i) {
        std::vector<char> m(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
        for (int v : odd[i]) m[static_cast<std::size_t>(v)] = 1;
        for (std::size_t j = i + 1; j < odd.size(); ++j) {
            bool disjoint = true;
            for (int v : odd[j])
                if (m[static_cast<std::size_t>(v)]) {
                    disjoint = false;
                    break;
                }
            if (!disjoint) continue;
            bool bridged = false;
            for (int v : odd[i]) {
                for (int w : odd[j])
                    if (g.has_edge(v, w)) {
                        bridged = true;
                        break;
                    }
                if (bridged) break;
            }
            if (!bridged) return false;
        }
    }
    return true;
}

namespace {

// Chordless-cycle backtracking: every path vertex is adjacent only to its
// path neighbors (closing back to start allowed at emission time).
void chordless_from(const Graph& g, int start, std::vector<int>& path, std::vector<char>& on_path,
                    bool& found, std::size_t min_len) {
    if (found) return;
    int v = path.back();
    for (int w : g.neighbors(v)) {
        if (found) return;
        if (w <= start || on_path[static_cast<std::size_t>(w)]) continue;
        bool chord = false;
        // w may touch only v among path vertices; start allowed only when
        // it would close the cycle, checked below.
        for (std::size_t t = 0; t + 1 < path.size(); ++t)
            if (t != 0 && g.has_edge(path[t], w)) {
                chord = true;
                break;
            }
        if (chord) continue;
        bool closes = g.has_edge(w, start);
        if (closes && path.size() + 1 >= min_len) {
            if (path[1] < w) {
                found = true;
                return;
            }
        }
        if (closes && path.size() >= 2) continue;  // chord to start on any longer path
        on_path[static_cast<std::size_t>(w)] = 1;
        path.push_back(w);
        chordless_from(g, start, path, on_path, found, min_len);
        path.pop_back();
        on_path[static_cast<std::size_t>(w)] = 0;
    }
}

}  // namespace

bool is_chordal_bipartite(const Graph& g, int size_limit) {
    if (!is_bipartite(g)) throw NotBipartiteError();
    if (g.vertex_count() > size_limit)
        throw SizeLimitError("graph exceeds the exhaustive cycle-search bound");
    bool found = false;
    std::vector<char> on_path(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
    for (int s = 1; s <= g.vertex_count() && !found; ++s) {
        std::vector<int> path{s};
        on_path[static_cast<std::size_t>(s)] = 1;
        chordless_from(g, s, path, on_path, found, 6);
        on_path[static_cast<std::size_t>(s)] = 0;
    }
    return !found;
}

bool satisfies_star_condition(const Graph& g, const Bipartition& parts) {
    std::vector<int> side(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
    std::vector<int> label(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
    for (std::size_t k = 0; k < parts.part1.size(); ++k) {
        side[static_cast<std::size_t>(parts.part1[k])] = 1;
        label[static_cast<std::size_t>(parts.part1[k])] = static_cast<int>(k) + 1;
    }
    for (std::size_t k = 0; k < parts.part2.size(); ++k) {
        side[static_cast<std::size_t>(parts.part2[k])] = 2;
        label[static_cast<std::size_t>(parts.part2[k])] = static_cast<int>(k) + 1;
    }
    for (const auto& [i, j] : g.edges())
        if (side[static_cast<std::size_t>(i)] == side[static_cast<std::size_t>(j)])
            throw NotBipartiteError("given parts are not a bipartition");
    const int p = static_cast<int>(parts.part1.size());
    const int q = static_cast<int>(parts.part2.size());
    auto edge = [&](int i, int k) {
        return g.has_edge(parts.part1[static_cast<std::size_t>(i - 1)],
                          parts.part2[static_cast<std::size_t>(k - 1)]);
    };
    for (int i = 1; i <= p; ++i)
        for (int j = i + 1; j <= p; ++j)
            for (int k = 1; k <= q; ++k)
                for (int l = k + 1; l <= q; ++l)
                    if (edge(i, l) && edge(j, k) && edge(j, l) && !edge(i, k)) return false;
    return true;
}

Graph split_apex(const Graph& g, int v) {
    const int d = g.vertex_count();
    if (v < 1 || v > d) throw PreconditionError("apex vertex out of range");
    if (!is_connected(g)) throw NotConnectedError();
    if (is_bipartite(g))
        throw PreconditionError("graph is bipartite; apex splitting expects a nonbipartite graph");

    // Relabel v <-> d so the apex is the highest vertex; edge order kept.
    auto relabel = [&](int x) { return x == v ? d : (x == d ? v : x); };
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.edge_count());
    for (auto [i, j] : g.edges()) edges.emplace_back(relabel(i), relabel(j));
    Graph h(d, edges);

    // Every odd cycle passes through d iff the rest of the graph is bipartite.
    std::vector<std::pair<int, int>> inner;
    for (auto [i, j] : h.edges())
        if (i != d && j != d) inner.emplace_back(i, j);
    Graph rest(d > 1 ? d - 1 : 1, inner);
    auto parts = is_bipartite(rest);
    if (!parts)
        throw ApexError("some odd cycle avoids the chosen apex vertex");

    std::vector<char> in_part2(static_cast<std::size_t>(d) + 1, 0);
    for (int x : parts->part2) in_part2[static_cast<std::size_t>(x)] = 1;

    std::vector<std::pair<int, int>> split;
    split.reserve(h.edge_count());
    for (auto [i, j] : h.edges()) {
        if (j == d && in_part2[static_cast<std::size_t>(i)])
            split.emplace_back(i, d + 1);
        else
            split.emplace_back(i, j);
    }
    Graph result(d + 1, std::move(split));
    if (!is_bipartite(result)) throw PreconditionError("internal: split result not bipartite");
    return result;
}

IntMatrix rho_config_bipartite_reduced(const Graph& g, const Bipartition& parts) {
    if (parts.part2.empty()) throw NotBipartiteError("bipartition has an empty part");
    int drop = parts.part2.back();
    return graph_config_rho(g).with_row_deleted(static_cast<std::size_t>(drop - 1));
}

IntMatrix rho_config_for_unimodularity(const Graph& g) {
    if (auto parts = is_bipartite(g)) return rho_config_bipartite_reduced(g, *parts);
    return graph_config_rho(g);
}

}  // namespace censym
