#pragma once

#include <cstdint>
#include <vector>

#include "probetrace/sparse.hpp"

namespace probetrace {

/// Geodesic distances in G(A) from one source, truncated at `cap`.
struct DistanceMap {
    static constexpr int kUnreached = -1;

    int source = 0;
    int cap = 0;
    std::vector<int> dist;  // kUnreached beyond cap or in other components

    bool reached(int v) const { return dist[v] != kUnreached; }
};

/// Truncated breadth-first search on G(A). dist[source] = 0, every reported
/// distance is <= cap, nodes farther than cap keep the unreached sentinel.
DistanceMap bfs_distances(const SparseSymMatrix& M, int source, int cap);

/// All-pairs geodesic distances as n stacked BFS rows (kUnreached where
/// disconnected). Intended for dense-oracle-scale n.
std::vector<std::vector<int>> all_pairs_distances(const SparseSymMatrix& M);

/// Adjacency matrix of the largest connected component of a random geometric
/// graph: n points uniform in the unit square, unit-weight edge when the
/// Euclidean distance is at most `radius`. Coordinates are drawn from a
/// single seeded stream, all x first and then all y, so runs with equal
/// (n, radius, seed) are bitwise identical. Component ties break toward the
/// smallest contained original index; surviving nodes keep their relative
/// order.
SparseSymMatrix random_geometric_graph(int n, double radius, std::uint64_t seed);

/// radius = sqrt(log n / (pi n)), the rule used to keep color counts stable
/// across sizes.
double rgg_radius_rule(int n);

/// Unit-weight path graph adjacency on n nodes (0-1-2-...-(n-1)).
SparseSymMatrix path_graph(int n);

/// Unit-weight nearest-neighbor lattice adjacency for the given extents.
/// Linear node index is row-major with coordinate 0 fastest.
SparseSymMatrix lattice_graph(const std::vector<int>& dims);

}  // namespace probetrace
