#ifndef VCPOLY_TUPLES_HPP
#define VCPOLY_TUPLES_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "vcpoly/graph.hpp"

namespace vcpoly {

// A k-tuple over V = {0..n-1}, stored as entries. Tuples are also handled
// as codes: the rank in row-major lexicographic order over V^k.
using Tuple = std::vector<int>;

inline long pow_long(int n, int k) {
    long p = 1;
    for (int i = 0; i < k; ++i) p *= n;
    return p;
}

inline int tuple_code(const Tuple& u, int n) {
    int code = 0;
    for (int e : u) code = code * n + e;
    return code;
}

inline Tuple tuple_decode(int code, int n, int k) {
    Tuple u(k);
    for (int i = k - 1; i >= 0; --i) {
        u[i] = code % n;
        code /= n;
    }
    return u;
}

// phi: replace entry at position pos (0-based) by vertex w.
inline Tuple phi(const Tuple& u, int pos, int w) {
    if (pos < 0 || pos >= static_cast<int>(u.size()))
        throw std::out_of_range("phi: position out of range");
    Tuple r = u;
    r[pos] = w;
    return r;
}

// Code-level phi; stride = n^(k-1-pos) precomputed by callers in hot loops.
inline int phi_code(int code, int old_entry, int w, int stride) {
    return code + (w - old_entry) * stride;
}

inline Tuple tuple_rho(const Tuple& u) {
    if (u.size() < 2) throw std::invalid_argument("tuple_rho: k must be >= 2");
    return Tuple(u.begin(), u.end() - 1);
}

inline Tuple tuple_nu(const Tuple& u) {
    if (u.empty()) throw std::invalid_argument("tuple_nu: k must be >= 1");
    Tuple r = u;
    r.push_back(u.back());
    return r;
}

// k x k matrix over {-1,0,+1}: 0 on equal entries, +1 on edges, -1 otherwise.
// Flattened row-major. Two tuples have the same combinatorial type in their
// graphs exactly when these matrices coincide.
using CombMatrix = std::vector<std::int8_t>;

inline CombMatrix comb_matrix(const Graph& g, const Tuple& u) {
    const int k = static_cast<int>(u.size());
    CombMatrix m(static_cast<size_t>(k) * k, 0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (u[i] == u[j]) continue;
            m[i * k + j] = g.has_edge(u[i], u[j]) ? 1 : -1;
        }
    return m;
}

// The three substitution sets at position pos, as sorted tuple codes:
//   all       = { phi_pos(u, w) : w in V }
//   nbr       = those with w adjacent to u[pos]
//   nbr_bar   = all minus nbr
struct SubstitutionSets {
    std::vector<int> nbr, nbr_bar, all;
};

SubstitutionSets neighborhood_sets(const Graph& g, const Tuple& u, int pos);

}  // namespace vcpoly

#endif
