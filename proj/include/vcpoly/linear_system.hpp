#ifndef VCPOLY_LINEAR_SYSTEM_HPP
#define VCPOLY_LINEAR_SYSTEM_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vcpoly/rational.hpp"
#include "vcpoly/varset.hpp"

namespace vcpoly {

enum class RowRel { Eq, Ge };

// One constraint: sum of coeff * var  (rel)  rhs. Terms are sorted by
// column and carry no zero coefficients.
struct Row {
    std::vector<std::pair<std::int32_t, Rat>> terms;
    Rat rhs = 0;
    RowRel rel = RowRel::Eq;
    std::string label;
};

enum class SystemFlavor { Birkhoff, Tinhofer, QPoly, Custom };

std::string flavor_name(SystemFlavor f);

// Sparse exact-rational constraint system over variables Y_I indexed by
// consistent VarSets of size <= k. Every variable is implicitly bounded
// below by 0; Y_empty is fixed to 1 by a dedicated row. Inconsistent
// VarSets are never materialized (they are identically zero).
struct LinearSystem {
    int n = 0;
    int k = 1;
    SystemFlavor flavor = SystemFlavor::Custom;
    std::vector<VarSet> vars;              // column -> VarSet; column 0 is Y_empty
    std::map<VarSet, std::int32_t> index;  // VarSet -> column
    std::vector<Row> rows;
    long prezeroed_count = 0;  // inconsistent VarSets of size <= k

    int num_vars() const { return static_cast<int>(vars.size()); }
    int num_rows() const { return static_cast<int>(rows.size()); }
    std::optional<std::int32_t> column(const VarSet& vs) const {
        auto it = index.find(vs);
        if (it == index.end()) return std::nullopt;
        return it->second;
    }
};

// Map VarSet -> value. Variables absent from the map are read as 0 by
// check_point only when `complete` is false there.
struct ExtendedPoint {
    std::map<VarSet, Rat> values;

    Rat value(const VarSet& vs) const {
        auto it = values.find(vs);
        return it == values.end() ? Rat(0) : it->second;
    }
};

}  // namespace vcpoly

#endif
