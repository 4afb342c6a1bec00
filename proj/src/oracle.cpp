#include "vcpoly/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "vcpoly/builders.hpp"
#include "vcpoly/lp.hpp"

namespace vcpoly {

UnorderedPartition to_unordered(const OrderedPartition& p) { return unordered_cells(p); }

namespace {

bool preserves_adjacency(const Graph& g, const Graph& h, const Perm& perm) {
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (g.has_edge(u, v) != h.has_edge(perm[u], perm[v])) return false;
    return true;
}

int permuted_code(const Perm& perm, int code, int n, int k) {
    int out = 0;
    Tuple u = tuple_decode(code, n, k);
    for (int i = 0; i < k; ++i) out = out * n + perm[u[i]];
    return out;
}

bool maps_cells(const Perm& perm, int n, int k, const std::vector<std::int32_t>& from,
                const std::vector<std::int32_t>& to) {
    std::vector<std::int32_t> mapped;
    mapped.reserve(from.size());
    for (std::int32_t code : from) mapped.push_back(permuted_code(perm, code, n, k));
    std::sort(mapped.begin(), mapped.end());
    return mapped == to;
}

}  // namespace

std::vector<Perm> enumerate_iso(const Graph& g, const Graph& h, const OrderedPartition* pi,
                                const OrderedPartition* tau) {
    if (g.n > 8) throw std::invalid_argument("enumerate_iso: guard n <= 8 exceeded");
    std::vector<Perm> found;
    if (g.n != h.n) return found;
    if ((pi == nullptr) != (tau == nullptr))
        throw std::invalid_argument("enumerate_iso: give both partitions or neither");
    if (pi && (pi->num_cells() != tau->num_cells()))
        return found;

    Perm perm(g.n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (!preserves_adjacency(g, h, perm)) continue;
        if (pi) {
            bool ok = true;
            for (int i = 0; ok && i < pi->num_cells(); ++i)
                ok = maps_cells(perm, g.n, pi->k, pi->cells[i], tau->cells[i]);
            if (!ok) continue;
        }
        found.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return found;
}

UnorderedPartition orbit_partition(const Graph& g, int k, const UnorderedPartition* pi) {
    if (g.n > 6 || k > 3) throw std::invalid_argument("orbit_partition: guard n <= 6, k <= 3");
    const long total = pow_long(g.n, k);

    std::vector<Perm> auts;
    {
        std::vector<Perm> all = enumerate_iso(g, g);
        if (!pi) {
            auts = std::move(all);
        } else {
            std::vector<std::vector<std::int32_t>> cells = *pi;
            for (auto& c : cells) std::sort(c.begin(), c.end());
            for (const Perm& perm : all) {
                bool ok = true;
                for (const auto& cell : cells) {
                    if (!maps_cells(perm, g.n, k, cell, cell)) {
                        ok = false;
                        break;
                    }
                }
                if (ok) auts.push_back(perm);
            }
        }
    }

    // Union-find over tuple codes under the group action.
    std::vector<int> parent(total);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const Perm& perm : auts)
        for (long c = 0; c < total; ++c) {
            int a = find(static_cast<int>(c));
            int b = find(permuted_code(perm, static_cast<int>(c), g.n, k));
            if (a != b) parent[a] = b;
        }
    std::map<int, std::vector<std::int32_t>> groups;
    for (long c = 0; c < total; ++c) groups[find(static_cast<int>(c))].push_back(static_cast<std::int32_t>(c));
    UnorderedPartition cells;
    for (auto& [root, cell] : groups) cells.push_back(std::move(cell));
    std::sort(cells.begin(), cells.end());
    return cells;
}

UnorderedPartition naive_wl(const Graph& g, int k, const UnorderedPartition* start) {
    if (g.n > 6 || k > 3) throw std::invalid_argument("naive_wl: guard n <= 6, k <= 3");
    const int n = g.n;
    const long total = pow_long(n, k);

    std::vector<int> cls(total, 0);
    if (start) {
        for (size_t i = 0; i < start->size(); ++i)
            for (std::int32_t code : (*start)[i]) cls[code] = static_cast<int>(i);
    }

    std::vector<Tuple> tuples(total);
    for (long c = 0; c < total; ++c) tuples[c] = tuple_decode(static_cast<int>(c), n, k);

    for (long round = 0; round <= total + 1; ++round) {
        // Key: old class, edge/equality pattern, component permutations'
        // classes, and the multiset of per-w class vectors.
        std::vector<std::vector<int>> keys(total);
        for (long c = 0; c < total; ++c) {
            const Tuple& u = tuples[c];
            std::vector<int> key;
            key.push_back(cls[c]);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) {
                    if (u[i] == u[j])
                        key.push_back(0);
                    else
                        key.push_back(g.has_edge(u[i], u[j]) ? 1 : -1);
                }
            if (k >= 2) {
                Tuple t = u;
                std::swap(t[0], t[1]);
                key.push_back(cls[tuple_code(t, n)]);
                Tuple cy(u.begin() + 1, u.end());
                cy.push_back(u[0]);
                key.push_back(cls[tuple_code(cy, n)]);
            }
            std::vector<std::vector<int>> vectors;
            vectors.reserve(n);
            for (int w = 0; w < n; ++w) {
                std::vector<int> vec(k);
                for (int i = 0; i < k; ++i) vec[i] = cls[tuple_code(phi(u, i, w), n)];
                vectors.push_back(std::move(vec));
            }
            std::sort(vectors.begin(), vectors.end());
            for (const auto& vec : vectors) key.insert(key.end(), vec.begin(), vec.end());
            keys[c] = std::move(key);
        }
        std::map<std::vector<int>, int> ids;
        std::vector<int> next(total);
        for (long c = 0; c < total; ++c) {
            auto [it, fresh] = ids.emplace(keys[c], static_cast<int>(ids.size()));
            (void)fresh;
            next[c] = it->second;
        }
        bool changed = false;
        // Same classes iff the relabeling old->new is consistent both ways.
        std::map<int, int> fwd;
        for (long c = 0; c < total; ++c) {
            auto [it, fresh] = fwd.emplace(cls[c], next[c]);
            if (!fresh && it->second != next[c]) changed = true;
        }
        if (!changed && fwd.size() != ids.size()) changed = true;
        cls = std::move(next);
        if (!changed) break;
    }

    std::map<int, std::vector<std::int32_t>> groups;
    for (long c = 0; c < total; ++c) groups[cls[c]].push_back(static_cast<std::int32_t>(c));
    UnorderedPartition cells;
    for (auto& [id, cell] : groups) cells.push_back(std::move(cell));
    std::sort(cells.begin(), cells.end());
    return cells;
}

}  // namespace vcpoly
