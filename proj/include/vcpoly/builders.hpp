#ifndef VCPOLY_BUILDERS_HPP
#define VCPOLY_BUILDERS_HPP

#include "vcpoly/linear_system.hpp"
#include "vcpoly/partition.hpp"

namespace vcpoly {

// Level-k lift of the doubly-stochastic system: variables are all
// consistent VarSets of size <= k; per consistent I with |I| <= k-1 and
// every vertex, a left and a right completion-sum row; Y_empty = 1.
LinearSystem build_birkhoff(int n, int k);

// build_birkhoff plus, per consistent I with |I| <= k-1 and every vertex
// pair (u, v), the row
//   sum_{w ~H v} Y_{I + (u,w)}  -  sum_{w ~G u} Y_{I + (w,v)}  =  0.
// Rows are deduplicated by canonical form.
LinearSystem build_tinhofer(const Graph& g, const Graph& h, int k);

// build_birkhoff plus zero-fixes of every variable joining an edge of one
// graph with a non-edge of the other. No zeroing happens at k = 1.
LinearSystem build_qpoly(const Graph& g, const Graph& h, int k);

// Adds zero-fix rows for every variable all of whose tuple pairings land
// in mismatched cells of (pi, tau); partitions must live over V^k of the
// system's (n, k).
LinearSystem restrict_to_partition(const LinearSystem& sys, const OrderedPartition& pi,
                                   const OrderedPartition& tau);

// The explicit point carried by a stable equivalent pair: Y_{<u,v>} =
// 1/|pi_s| on matched cells s, 0 elsewhere, Y_empty = 1. Throws
// UniformPointError naming the VarSet if two pairings disagree (the pair
// was not stable-equivalent).
struct UniformPointError : std::runtime_error {
    VarSet varset;
    UniformPointError(std::string msg, VarSet vs)
        : std::runtime_error(std::move(msg)), varset(std::move(vs)) {}
};

ExtendedPoint uniform_point(const OrderedPartition& pi, const OrderedPartition& tau, int k);

// Lift of a vertex permutation: Y_I = 1 iff every pair of I follows perm.
ExtendedPoint lift_permutation(const LinearSystem& sys, const std::vector<int>& perm);

// The lifted identity.
ExtendedPoint extended_identity(const LinearSystem& sys);

}  // namespace vcpoly

#endif
