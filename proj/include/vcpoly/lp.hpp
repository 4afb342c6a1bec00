#ifndef VCPOLY_LP_HPP
#define VCPOLY_LP_HPP

#include <set>

#include "vcpoly/linear_system.hpp"

namespace vcpoly {

enum class LpStatus { Feasible, Infeasible };

// Outcome of a feasibility query. Exactly one of witness/certificate is
// meaningful; both re-verify exactly against the system before being
// returned (failure to re-verify is an internal error, not a verdict).
struct LpVerdict {
    LpStatus status = LpStatus::Infeasible;
    ExtendedPoint witness;  // satisfies every row exactly
    // Row multipliers lambda with: lambda_r >= 0 on >= rows, the combined
    // coefficient of every variable <= 0, and the combined rhs > 0.
    std::vector<std::pair<int, Rat>> certificate;
};

LpVerdict lp_feasible(const LinearSystem& sys);

struct MaxVarResult {
    Rat value = 0;
    bool prezeroed = false;  // unregistered VarSet: identically zero
};

// Exact maximum of one variable over the system. Pre: system feasible.
MaxVarResult lp_max_var(const LinearSystem& sys, const VarSet& vs);

enum class OptStatus { Optimal, Infeasible, Unbounded };

struct OptResult {
    OptStatus status = OptStatus::Infeasible;
    Rat value = 0;
    ExtendedPoint argmax;
    std::vector<std::pair<int, Rat>> certificate;  // when infeasible
};

// Exact maximum of a linear objective; terms on unregistered VarSets are
// rejected.
OptResult lp_maximize(const LinearSystem& sys,
                      const std::vector<std::pair<VarSet, Rat>>& objective);

struct RowResidual {
    int row = 0;
    std::string label;
    Rat value = 0;  // equality residual or inequality slack
    bool ok = false;
};

struct PointCheck {
    bool pass = false;
    std::vector<RowResidual> rows;       // one entry per system row
    std::vector<VarSet> negative_vars;   // violations of Y >= 0
    std::vector<int> violated_rows() const {
        std::vector<int> out;
        for (const auto& r : rows)
            if (!r.ok) out.push_back(r.row);
        return out;
    }
};

// Exact per-row residual report. Throws if the point misses a registered
// variable.
PointCheck check_point(const LinearSystem& sys, const ExtendedPoint& pt);

struct ForcedZeroResult {
    bool all = false;        // system infeasible: every variable trivially zero
    std::set<VarSet> zeros;  // registered VarSets of size <= level with max 0
};

// Exact forced-zero set among the variables expressible as level-arity
// tuple pairings (i.e. registered VarSets of size <= level).
ForcedZeroResult forced_zero_set(const LinearSystem& sys, int level);

}  // namespace vcpoly

#endif
