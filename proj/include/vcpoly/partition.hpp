#ifndef VCPOLY_PARTITION_HPP
#define VCPOLY_PARTITION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "vcpoly/tuples.hpp"

namespace vcpoly {

// Ordered partition of V^k. Cells are nonempty, disjoint, cover all of V^k,
// and are stored as sorted tuple codes; cell_of gives O(1) index lookup.
// Cell indices are 0-based in code, 1-based in any text/JSON output.
struct OrderedPartition {
    int n = 0;
    int k = 1;
    std::vector<std::int32_t> cell_of;               // size n^k
    std::vector<std::vector<std::int32_t>> cells;    // sorted codes per cell

    int num_cells() const { return static_cast<int>(cells.size()); }
    long num_tuples() const { return static_cast<long>(cell_of.size()); }
    bool complete() const { return cells.size() == cell_of.size(); }

    static OrderedPartition trivial(int n, int k);
    // Validates the cell list (nonempty, disjoint, covering).
    static OrderedPartition from_cells(int n, int k,
                                       std::vector<std::vector<std::int32_t>> cells);
    // Groups tuples by label; cells ordered by ascending label value.
    static OrderedPartition from_labels(int n, int k, const std::vector<std::int64_t>& labels);

    bool operator==(const OrderedPartition& o) const {
        return n == o.n && k == o.k && cells == o.cells;
    }
};

// Unordered view: cells sorted internally, then sorted by first element.
std::vector<std::vector<std::int32_t>> unordered_cells(const OrderedPartition& p);

// pi <= tau at the unordered level: every pi-cell is contained in a tau-cell.
bool refines(const OrderedPartition& fine, const OrderedPartition& coarse);
// Equal as unordered partitions.
bool same_unordered(const OrderedPartition& a, const OrderedPartition& b);
// pi ~ tau: same number of cells and matching cell sizes per index.
bool balanced(const OrderedPartition& a, const OrderedPartition& b);
// (pi,tau) <= (pi2,tau2): [u]_pi = [v]_tau implies [u]_pi2 = [v]_tau2.
bool pair_refines(const OrderedPartition& pi, const OrderedPartition& tau,
                  const OrderedPartition& pi2, const OrderedPartition& tau2);

struct PartitionPair {
    OrderedPartition left, right;
    bool balanced() const { return vcpoly::balanced(left, right); }
};

// JSON: {"k": int, "cells": [[[v,...],...], ...]} with 1-based vertices.
std::string partition_to_json(const OrderedPartition& p);
OrderedPartition partition_from_json(const std::string& text, int n);

}  // namespace vcpoly

#endif
