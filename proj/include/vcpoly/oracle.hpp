#ifndef VCPOLY_ORACLE_HPP
#define VCPOLY_ORACLE_HPP

#include <vector>

#include "vcpoly/linear_system.hpp"
#include "vcpoly/partition.hpp"

namespace vcpoly {

// Ground truth by exhaustive enumeration, for small n only. Guards are hard
// errors so an oracle answer is either total or absent.

using Perm = std::vector<int>;  // perm[u] = image of u, 0-based

// Unordered partition of V^k: sorted cells of sorted tuple codes.
using UnorderedPartition = std::vector<std::vector<std::int32_t>>;

UnorderedPartition to_unordered(const OrderedPartition& p);

// All adjacency-preserving bijections G -> H; when partitions are given,
// only those mapping the i-th cell of pi onto the i-th cell of tau.
// Guard: n <= 8.
std::vector<Perm> enumerate_iso(const Graph& g, const Graph& h,
                                const OrderedPartition* pi = nullptr,
                                const OrderedPartition* tau = nullptr);

// Orbits of V^k under the automorphisms of g fixing every cell of pi
// (pi optional, over V^k). Guard: n <= 6, k <= 3.
UnorderedPartition orbit_partition(const Graph& g, int k,
                                   const UnorderedPartition* pi = nullptr);

// Fixed point of the literal multiset-bijection refinement over V^k,
// combined with the tuple-equality/edge pattern and component-permutation
// relations. Independent of the engine in refine.hpp/relations.hpp; used
// only to validate it. Guard: n <= 6, k <= 3.
UnorderedPartition naive_wl(const Graph& g, int k,
                            const UnorderedPartition* start = nullptr);

// Integer points of the system: every permutation of V is lifted to the
// extended variable space and kept when it satisfies all rows exactly.
// Guard: n <= 4, k <= 2.
std::vector<ExtendedPoint> integer_points(const LinearSystem& sys);

}  // namespace vcpoly

#endif
