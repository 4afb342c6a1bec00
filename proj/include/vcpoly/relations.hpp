#ifndef VCPOLY_RELATIONS_HPP
#define VCPOLY_RELATIONS_HPP

#include <optional>
#include <string>

#include "vcpoly/refine.hpp"

namespace vcpoly {

// The refinement families. Comb and Sym are the building blocks; the three
// algorithm families combine them:
//   DeltaSmall - per-position neighbor / non-neighbor substitution counts
//                (the generalized vertex classification algorithm; for k=1
//                this is classic color refinement)
//   DeltaBig   - per-position substitution counts over all vertices
//   WL         - multiset of full substitution columns (Weisfeiler-Lehman)
enum class RelationKind { Comb, Sym, DeltaSmall, DeltaBig, WL };

// CLI names: cvc -> DeltaSmall, wl -> WL, delta -> DeltaBig, c, s.
RelationKind relation_from_name(const std::string& name);
std::string relation_name(RelationKind kind);

// Combined signature of one tuple: cell index, then (for k >= 2) the
// symmetric and combinatorial parts, then the family part. Equal signatures
// imply equal cell index by construction.
Signature relation_signature(RelationKind kind, const Graph& g, const OrderedPartition& p,
                             int tuple_code);
SignatureFn signature_fn(RelationKind kind);

bool is_stable(RelationKind kind, const Graph& g, const OrderedPartition& p);

// Cross-graph equivalence at a stable pair: balanced and, per matched cell
// index, equal signatures on both sides. Throws if an input is not stable.
bool equiv_check(RelationKind kind, const Graph& g, const OrderedPartition& pg,
                 const Graph& h, const OrderedPartition& ph);

struct AutResult {
    OrderedPartition partition;
    bool complete = false;
    int rounds = 0;
};

AutResult aut_run(RelationKind kind, const Graph& g, int k,
                  std::optional<OrderedPartition> start = std::nullopt);

enum class IsoVerdict { NotIsomorphic, Undecided };

struct IsoResult {
    IsoVerdict verdict = IsoVerdict::Undecided;
    OrderedPartition left, right;  // fixed points (empty if decided trivially)
    std::string reason;
};

IsoResult iso_run(RelationKind kind, const Graph& g, const Graph& h, int k,
                  std::optional<OrderedPartition> start_g = std::nullopt,
                  std::optional<OrderedPartition> start_h = std::nullopt);

// Runs WL, DeltaSmall and DeltaBig on a pair and checks the implication
// chain between their equivalence verdicts plus the refinement chains.
// Any violation is an implementation bug.
struct ChainReport {
    bool wl_equiv = false, delta_equiv = false, delta_big_equiv = false;
    int wl_cells_left = 0, delta_cells_left = 0, delta_big_cells_left = 0;
    bool implications_hold = false;      // wl => delta => delta_big
    bool pair_chain_holds = false;       // guarded pair refinement chain
    bool single_graph_chains_hold = false;  // unordered wl* <= delta* <= Delta* per side
    bool ok() const { return implications_hold && pair_chain_holds && single_graph_chains_hold; }
};

ChainReport implication_chain_check(const Graph& g, const Graph& h, int k,
                                    std::optional<OrderedPartition> start_g = std::nullopt,
                                    std::optional<OrderedPartition> start_h = std::nullopt);

// Checks rho(DeltaBig fixpoint over V^{k+1} of nu(pi)) = WL fixpoint of pi
// as unordered partitions (k >= 2).
struct RhoNuReport {
    bool unordered_equal = false;
    int wl_cells = 0, projected_cells = 0;
};

RhoNuReport rho_nu_correspondence_check(const Graph& g, int k,
                                        std::optional<OrderedPartition> start = std::nullopt);

// Isomorphism variant: WL equivalence at arity k iff DeltaBig equivalence
// at arity k+1, both from trivial starts (k >= 2).
struct RhoNuIsoReport {
    bool wl_equiv = false;
    bool delta_big_equiv = false;
    bool consistent() const { return wl_equiv == delta_big_equiv; }
};

RhoNuIsoReport rho_nu_iso_check(const Graph& g, const Graph& h, int k);

}  // namespace vcpoly

#endif
