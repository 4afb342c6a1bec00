#include "vcpoly/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

namespace vcpoly {

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges_1based) {
    if (n < 1) throw std::invalid_argument("make_graph: n must be >= 1");
    std::vector<std::pair<int, int>> es;
    es.reserve(edges_1based.size());
    for (auto [u, v] : edges_1based) {
        if (u < 1 || u > n || v < 1 || v > n)
            throw std::invalid_argument("make_graph: vertex out of range");
        if (u == v) throw std::invalid_argument("make_graph: self-loop");
        int a = u - 1, b = v - 1;
        if (a > b) std::swap(a, b);
        es.emplace_back(a, b);
    }
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    Graph g;
    g.n = n;
    g.edges = std::move(es);
    g.adj.assign(n, {});
    for (auto [a, b] : g.edges) {
        g.adj[a].push_back(b);
        g.adj[b].push_back(a);
    }
    for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());
    return g;
}

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& msg) {
        throw ParseError("line " + std::to_string(lineno) + ": " + msg);
    };

    int n = -1;
    long m = -1;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;  // skip blank lines
        if (n < 0) {
            std::istringstream hs(line);
            if (!(hs >> n >> m) || n < 1 || m < 0) fail("expected header 'n m'");
            std::string rest;
            if (hs >> rest) fail("trailing tokens after header");
            break;
        }
    }
    if (n < 0) throw ParseError("line 0: empty document, expected header 'n m'");

    std::vector<std::pair<int, int>> es;
    long seen = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        std::istringstream es2(line);
        int u, v;
        if (!(es2 >> u >> v)) fail("expected edge 'u v'");
        std::string rest;
        if (es2 >> rest) fail("trailing tokens after edge");
        if (u < 1 || u > n || v < 1 || v > n) fail("vertex out of range");
        if (u == v) fail("self-loop");
        es.emplace_back(u, v);
        ++seen;
    }
    if (seen != m)
        throw ParseError("line " + std::to_string(lineno) + ": expected " + std::to_string(m) +
                         " edges, found " + std::to_string(seen));
    return make_graph(n, es);
}

std::string write_graph(const Graph& g) {
    std::ostringstream out;
    out << g.n << ' ' << g.edges.size() << '\n';
    for (auto [a, b] : g.edges) out << (a + 1) << ' ' << (b + 1) << '\n';
    return out.str();
}

Graph apply_permutation(const Graph& g, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != g.n)
        throw std::invalid_argument("apply_permutation: size mismatch");
    std::vector<std::pair<int, int>> es;
    es.reserve(g.edges.size());
    for (auto [a, b] : g.edges) es.emplace_back(perm[a] + 1, perm[b] + 1);
    return make_graph(g.n, es);
}

std::string graph_digest(const Graph& g) {
    const std::string text = write_graph(g);
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Graph example_graph() { return make_graph(4, {{1, 2}, {2, 3}, {2, 4}, {3, 4}}); }

Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 1; i <= n; ++i) es.emplace_back(i, i % n + 1);
    return make_graph(n, es);
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> es;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) es.emplace_back(u, v);
    return make_graph(n, es);
}

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 1; i < n; ++i) es.emplace_back(i, i + 1);
    return make_graph(n, es);
}

Graph empty_graph(int n) { return make_graph(n, {}); }

Graph two_triangles() {
    return make_graph(6, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}});
}

Graph petersen_graph() {
    return make_graph(10, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1},
                           {6, 8}, {8, 10}, {10, 7}, {7, 9}, {9, 6},
                           {1, 6}, {2, 7}, {3, 8}, {4, 9}, {5, 10}});
}

}  // namespace vcpoly
