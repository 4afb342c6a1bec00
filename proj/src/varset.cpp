#include "vcpoly/varset.hpp"

#include <algorithm>
#include <stdexcept>

namespace vcpoly {

std::string VarSet::name() const {
    std::string s = "Y_";
    for (size_t i = 0; i < pairs.size(); ++i) {
        if (i) s += '_';
        s += std::to_string(pairs[i].first + 1);
        s += '.';
        s += std::to_string(pairs[i].second + 1);
    }
    return s;
}

std::optional<VarSet> canon_varset(std::vector<std::pair<int, int>> pairs) {
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    for (size_t i = 1; i < pairs.size(); ++i)
        if (pairs[i].first == pairs[i - 1].first) return std::nullopt;  // one left, two rights
    for (size_t i = 0; i < pairs.size(); ++i)
        for (size_t j = i + 1; j < pairs.size(); ++j)
            if (pairs[i].second == pairs[j].second) return std::nullopt;  // two lefts, one right
    return VarSet{std::move(pairs)};
}

std::optional<VarSet> tuple_pairing(const Tuple& u, const Tuple& v) {
    if (u.size() != v.size()) throw std::invalid_argument("tuple_pairing: arity mismatch");
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(u.size());
    for (size_t i = 0; i < u.size(); ++i) pairs.emplace_back(u[i], v[i]);
    return canon_varset(std::move(pairs));
}

std::pair<Tuple, Tuple> pad_pairing(const VarSet& vs, int k) {
    if (vs.empty() || static_cast<int>(vs.size()) > k)
        throw std::invalid_argument("pad_pairing: size must be in 1..k");
    Tuple u, v;
    u.reserve(k);
    v.reserve(k);
    for (auto [a, b] : vs.pairs) {
        u.push_back(a);
        v.push_back(b);
    }
    while (static_cast<int>(u.size()) < k) {
        u.push_back(vs.pairs.back().first);
        v.push_back(vs.pairs.back().second);
    }
    return {u, v};
}

std::vector<std::pair<Tuple, Tuple>> pairings_of(const VarSet& vs, int k) {
    const int s = static_cast<int>(vs.size());
    if (s < 1 || s > k) throw std::invalid_argument("pairings_of: size must be in 1..k");
    std::vector<std::pair<Tuple, Tuple>> out;
    // Assignments slot -> pair, filtered to those using every pair.
    std::vector<int> pick(k, 0);
    while (true) {
        std::vector<bool> used(s, false);
        for (int i = 0; i < k; ++i) used[pick[i]] = true;
        if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) {
            Tuple u(k), v(k);
            for (int i = 0; i < k; ++i) {
                u[i] = vs.pairs[pick[i]].first;
                v[i] = vs.pairs[pick[i]].second;
            }
            out.emplace_back(std::move(u), std::move(v));
        }
        int i = k - 1;
        while (i >= 0 && pick[i] == s - 1) pick[i--] = 0;
        if (i < 0) break;
        ++pick[i];
    }
    return out;
}

}  // namespace vcpoly
