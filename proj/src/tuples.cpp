#include "vcpoly/tuples.hpp"

#include <algorithm>

namespace vcpoly {

SubstitutionSets neighborhood_sets(const Graph& g, const Tuple& u, int pos) {
    if (pos < 0 || pos >= static_cast<int>(u.size()))
        throw std::out_of_range("neighborhood_sets: position out of range");
    const int k = static_cast<int>(u.size());
    const int n = g.n;
    const int stride = static_cast<int>(pow_long(n, k - 1 - pos));
    const int base = tuple_code(u, n);

    SubstitutionSets s;
    s.all.reserve(n);
    for (int w = 0; w < n; ++w) s.all.push_back(phi_code(base, u[pos], w, stride));
    s.nbr.reserve(g.degree(u[pos]));
    for (int w : g.adj[u[pos]]) s.nbr.push_back(phi_code(base, u[pos], w, stride));
    for (int w = 0; w < n; ++w)
        if (!g.has_edge(u[pos], w)) s.nbr_bar.push_back(phi_code(base, u[pos], w, stride));

    std::sort(s.all.begin(), s.all.end());
    std::sort(s.nbr.begin(), s.nbr.end());
    std::sort(s.nbr_bar.begin(), s.nbr_bar.end());
    return s;
}

}  // namespace vcpoly
