#pragma once

#include <optional>
#include <vector>

#include "censym/graph.hpp"
#include "censym/matrix.hpp"

namespace censym {

struct Bipartition {
    std::vector<int> part1;  ///< sorted ascending
    std::vector<int> part2;  ///< sorted ascending
};

bool is_connected(const Graph& g);

/// Deterministic bipartition: BFS 2-coloring with lowest-label roots, each
/// root in part 1. std::nullopt when an odd cycle exists.
std::optional<Bipartition> is_bipartite(const Graph& g);

struct OddCyclePair {
    std::vector<int> cycle1;
    std::vector<int> cycle2;
    bool disjoint = false;
};

/// All simple cycles, each in canonical form (smallest vertex first, smaller
/// neighbor second), sorted lexicographically.
std::vector<std::vector<int>> all_simple_cycles(const Graph& g, int size_limit = 16);

/// Exhaustive search for a vertex-disjoint pair of odd cycles; returns the
/// lexicographically smallest witness pair, or std::nullopt.
std::optional<OddCyclePair> find_disjoint_odd_cycles(const Graph& g, int size_limit = 16);

/// True iff every vertex-disjoint pair of odd cycles is joined by an edge.
/// Requires a connected graph.
bool disjoint_odd_cycles_bridged(const Graph& g, int size_limit = 16);

/// True iff no chordless cycle of length >= 6 exists. Requires bipartite.
bool is_chordal_bipartite(const Graph& g, int size_limit = 16);

/// Condition (*): with part 1 labelled 1..p and part 2 labelled 1'..q' (by
/// ascending vertex label), for all i < j, k < l:
/// {i,l'}, {j,k'}, {j,l'} in E  implies  {i,k'} in E.
bool satisfies_star_condition(const Graph& g, const Bipartition& parts);

/// Splits the apex v (a vertex met by every odd cycle) into two
/// bipartition-respecting copies, yielding a bipartite graph on
/// vertex_count + 1 vertices with the same toric ideals. The apex is first
/// relabelled to the highest vertex d; edge order is preserved.
Graph split_apex(const Graph& g, int v);

/// rho configuration with the redundant row of a bipartite graph removed
/// (the row of the highest-labelled vertex of part 2).
IntMatrix rho_config_bipartite_reduced(const Graph& g, const Bipartition& parts);

/// The incidence configuration whose unimodularity Theorem 3-style checks
/// need: A_G itself for nonbipartite g, the row-reduced A_G for bipartite g.
IntMatrix rho_config_for_unimodularity(const Graph& g);

}  // namespace censym
