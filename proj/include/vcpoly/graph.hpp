#ifndef VCPOLY_GRAPH_HPP
#define VCPOLY_GRAPH_HPP

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace vcpoly {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Simple undirected graph on vertices 0..n-1 (1-based only in the text
// format). Neighbor lists are sorted; the edge list is sorted with u < v.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> adj;

    bool has_edge(int u, int v) const {
        if (u == v) return false;
        for (int w : adj[u])
            if (w == v) return true;
        return false;
    }
    int degree(int u) const { return static_cast<int>(adj[u].size()); }
    bool operator==(const Graph& o) const { return n == o.n && edges == o.edges; }
};

// Builds a graph from 1-based edge pairs; dedups, validates, sorts.
Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges_1based);

// Text format: first line "n m", then m lines "u v" (1-based).
Graph parse_graph(const std::string& text);

// Canonical writer: edges sorted ascending, 1-based, one per line.
std::string write_graph(const Graph& g);

// Relabels: vertex u of g becomes perm[u] in the result.
Graph apply_permutation(const Graph& g, const std::vector<int>& perm);

// FNV-1a digest of the canonical edge-list text, for report instance ids.
std::string graph_digest(const Graph& g);

// Pinned corpus used by tests and the verify suites.
Graph example_graph();  // 4 vertices, edges {1,2},{2,3},{2,4},{3,4}
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);
Graph empty_graph(int n);
Graph two_triangles();  // K3 + K3
Graph petersen_graph();

}  // namespace vcpoly

#endif
