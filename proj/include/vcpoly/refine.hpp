#ifndef VCPOLY_REFINE_HPP
#define VCPOLY_REFINE_HPP

#include <functional>

#include "vcpoly/partition.hpp"

namespace vcpoly {

// A refinement key for one tuple: a flat integer sequence compared
// lexicographically. Every key produced by this library starts with the
// tuple's current cell index, so one sorting round both refines the
// partition and preserves its cell order.
using Signature = std::vector<std::int32_t>;
using SignatureFn =
    std::function<Signature(const Graph&, const OrderedPartition&, int /*tuple code*/)>;

// One refinement round: cells become the signature classes, ordered by
// ascending signature. Requires sig to lead with the current cell index
// (checked); the result then refines p and respects its order.
OrderedPartition refine_round(const SignatureFn& sig, const Graph& g, const OrderedPartition& p);

struct FixpointResult {
    OrderedPartition partition;
    int rounds = 0;  // rounds until stable, excluding the final no-op round
};

FixpointResult refine_fixpoint(const SignatureFn& sig, const Graph& g, const OrderedPartition& p);

// Column of cell indices ([phi_1(u,w)], ..., [phi_k(u,w)]) for one w.
Signature substitution_column(const OrderedPartition& p, const Tuple& u, int w);

// Projection to arity k-1: (k-1)-tuples ordered by the cell of their
// nu-lift (duplicate the last entry).
OrderedPartition partition_rho(const OrderedPartition& p);

// Lift to arity k+1: (k+1)-tuples ordered by the cell of their rho-prefix,
// then by the substitution column of the appended coordinate.
OrderedPartition partition_nu(const OrderedPartition& p);

}  // namespace vcpoly

#endif
