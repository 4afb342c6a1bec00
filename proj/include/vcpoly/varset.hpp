#ifndef VCPOLY_VARSET_HPP
#define VCPOLY_VARSET_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vcpoly/tuples.hpp"

namespace vcpoly {

// A canonical set of vertex pairs indexing one extended variable Y_I.
// Pairs are 0-based, sorted, deduplicated. A set is consistent when no two
// pairs share a left vertex with different rights or a right vertex with
// different lefts; inconsistent sets index identically-zero variables and
// are never materialized.
struct VarSet {
    std::vector<std::pair<int, int>> pairs;

    size_t size() const { return pairs.size(); }
    bool empty() const { return pairs.empty(); }
    auto operator<=>(const VarSet&) const = default;

    // Stable name: "Y_" followed by the sorted pair list, 1-based.
    std::string name() const;
};

// Sort + dedup; nullopt when inconsistent.
std::optional<VarSet> canon_varset(std::vector<std::pair<int, int>> pairs);

// Pairing of two equal-arity tuples {(u_i, v_i)}; nullopt when inconsistent
// (equivalently: when the tuples have different equality patterns).
std::optional<VarSet> tuple_pairing(const Tuple& u, const Tuple& v);

// The canonical length-k padding of a consistent VarSet: entries repeat the
// last pair. Requires 1 <= size <= k.
std::pair<Tuple, Tuple> pad_pairing(const VarSet& vs, int k);

// All tuple pairs (u, v) of arity k with pairing exactly vs (each pair of
// vs used at least once). Requires 1 <= size <= k.
std::vector<std::pair<Tuple, Tuple>> pairings_of(const VarSet& vs, int k);

}  // namespace vcpoly

#endif
