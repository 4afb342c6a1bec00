#include "vcpoly/relations.hpp"

#include <algorithm>
#include <stdexcept>

namespace vcpoly {

RelationKind relation_from_name(const std::string& name) {
    if (name == "cvc") return RelationKind::DeltaSmall;
    if (name == "wl") return RelationKind::WL;
    if (name == "delta") return RelationKind::DeltaBig;
    if (name == "c") return RelationKind::Comb;
    if (name == "s") return RelationKind::Sym;
    throw std::invalid_argument("unknown relation '" + name + "' (expected cvc|wl|delta|c|s)");
}

std::string relation_name(RelationKind kind) {
    switch (kind) {
        case RelationKind::Comb: return "c";
        case RelationKind::Sym: return "s";
        case RelationKind::DeltaSmall: return "cvc";
        case RelationKind::DeltaBig: return "delta";
        case RelationKind::WL: return "wl";
    }
    return "?";
}

namespace {

void append_sym_part(Signature& sig, const OrderedPartition& p, const Tuple& u) {
    const int k = static_cast<int>(u.size());
    if (k < 2) return;
    Tuple t = u;
    std::swap(t[0], t[1]);
    sig.push_back(p.cell_of[tuple_code(t, p.n)]);
    Tuple c(u.begin() + 1, u.end());
    c.push_back(u[0]);
    sig.push_back(p.cell_of[tuple_code(c, p.n)]);
}

void append_comb_part(Signature& sig, const Graph& g, const Tuple& u) {
    for (std::int8_t e : comb_matrix(g, u)) sig.push_back(e);
}

// Per position: counts of neighbor substitutions per cell, and (unless
// dim-1) of non-neighbor substitutions per cell.
void append_neighbor_counts(Signature& sig, const Graph& g, const OrderedPartition& p,
                            const Tuple& u, int code, bool with_bar) {
    const int k = static_cast<int>(u.size());
    const int m = p.num_cells();
    std::vector<std::int32_t> nbr(m), bar(m);
    int stride = static_cast<int>(pow_long(p.n, k - 1));
    for (int i = 0; i < k; ++i) {
        std::fill(nbr.begin(), nbr.end(), 0);
        std::fill(bar.begin(), bar.end(), 0);
        for (int w = 0; w < p.n; ++w) {
            const std::int32_t cell = p.cell_of[phi_code(code, u[i], w, stride)];
            if (g.has_edge(u[i], w))
                ++nbr[cell];
            else
                ++bar[cell];
        }
        sig.insert(sig.end(), nbr.begin(), nbr.end());
        if (with_bar) sig.insert(sig.end(), bar.begin(), bar.end());
        stride /= p.n;
    }
}

void append_all_counts(Signature& sig, const OrderedPartition& p, const Tuple& u, int code) {
    const int k = static_cast<int>(u.size());
    const int m = p.num_cells();
    std::vector<std::int32_t> cnt(m);
    int stride = static_cast<int>(pow_long(p.n, k - 1));
    for (int i = 0; i < k; ++i) {
        std::fill(cnt.begin(), cnt.end(), 0);
        for (int w = 0; w < p.n; ++w) ++cnt[p.cell_of[phi_code(code, u[i], w, stride)]];
        sig.insert(sig.end(), cnt.begin(), cnt.end());
        stride /= p.n;
    }
}

// The n substitution columns, sorted ascending, concatenated.
void append_wl_part(Signature& sig, const OrderedPartition& p, const Tuple& u) {
    std::vector<Signature> cols;
    cols.reserve(p.n);
    for (int w = 0; w < p.n; ++w) cols.push_back(substitution_column(p, u, w));
    std::sort(cols.begin(), cols.end());
    for (const Signature& c : cols) sig.insert(sig.end(), c.begin(), c.end());
}

}  // namespace

Signature relation_signature(RelationKind kind, const Graph& g, const OrderedPartition& p,
                             int code) {
    const Tuple u = tuple_decode(code, p.n, p.k);
    const bool dim1 = (p.k == 1);
    Signature sig;
    sig.push_back(p.cell_of[code]);
    switch (kind) {
        case RelationKind::Comb:
            append_comb_part(sig, g, u);
            break;
        case RelationKind::Sym:
            append_sym_part(sig, p, u);
            break;
        case RelationKind::DeltaSmall:
            if (!dim1) {
                append_sym_part(sig, p, u);
                append_comb_part(sig, g, u);
            }
            append_neighbor_counts(sig, g, p, u, code, /*with_bar=*/!dim1);
            break;
        case RelationKind::DeltaBig:
            if (!dim1) {
                append_sym_part(sig, p, u);
                append_comb_part(sig, g, u);
            }
            append_all_counts(sig, p, u, code);
            break;
        case RelationKind::WL:
            if (!dim1) {
                append_sym_part(sig, p, u);
                append_comb_part(sig, g, u);
            }
            append_wl_part(sig, p, u);
            break;
    }
    return sig;
}

SignatureFn signature_fn(RelationKind kind) {
    return [kind](const Graph& g, const OrderedPartition& p, int code) {
        return relation_signature(kind, g, p, code);
    };
}

bool is_stable(RelationKind kind, const Graph& g, const OrderedPartition& p) {
    return refine_round(signature_fn(kind), g, p) == p;
}

bool equiv_check(RelationKind kind, const Graph& g, const OrderedPartition& pg,
                 const Graph& h, const OrderedPartition& ph) {
    if (pg.k != ph.k) throw std::invalid_argument("equiv_check: arity mismatch");
    if (g.n != h.n) return false;
    if (!is_stable(kind, g, pg) || !is_stable(kind, h, ph))
        throw std::invalid_argument("equiv_check: input partition is not stable");
    if (!balanced(pg, ph)) return false;
    for (int i = 0; i < pg.num_cells(); ++i) {
        // Stability makes the signature constant on each cell.
        if (relation_signature(kind, g, pg, pg.cells[i][0]) !=
            relation_signature(kind, h, ph, ph.cells[i][0]))
            return false;
    }
    return true;
}

AutResult aut_run(RelationKind kind, const Graph& g, int k,
                  std::optional<OrderedPartition> start) {
    OrderedPartition p0 = start ? std::move(*start) : OrderedPartition::trivial(g.n, k);
    if (p0.n != g.n || p0.k != k) throw std::invalid_argument("aut_run: start partition mismatch");
    FixpointResult fr = refine_fixpoint(signature_fn(kind), g, p0);
    AutResult r;
    r.complete = fr.partition.complete();
    r.partition = std::move(fr.partition);
    r.rounds = fr.rounds;
    return r;
}

IsoResult iso_run(RelationKind kind, const Graph& g, const Graph& h, int k,
                  std::optional<OrderedPartition> start_g,
                  std::optional<OrderedPartition> start_h) {
    IsoResult r;
    if (g.n != h.n) {
        r.verdict = IsoVerdict::NotIsomorphic;
        r.reason = "vertex count mismatch";
        return r;
    }
    OrderedPartition pg = start_g ? std::move(*start_g) : OrderedPartition::trivial(g.n, k);
    OrderedPartition ph = start_h ? std::move(*start_h) : OrderedPartition::trivial(h.n, k);
    if (!balanced(pg, ph)) {
        r.verdict = IsoVerdict::NotIsomorphic;
        r.reason = "start partitions are not balanced";
        return r;
    }
    r.left = refine_fixpoint(signature_fn(kind), g, pg).partition;
    r.right = refine_fixpoint(signature_fn(kind), h, ph).partition;
    if (equiv_check(kind, g, r.left, h, r.right)) {
        r.verdict = IsoVerdict::Undecided;
        r.reason = "stable partitions are equivalent";
    } else {
        r.verdict = IsoVerdict::NotIsomorphic;
        r.reason = "stable partitions are not equivalent";
    }
    return r;
}

ChainReport implication_chain_check(const Graph& g, const Graph& h, int k,
                                    std::optional<OrderedPartition> start_g,
                                    std::optional<OrderedPartition> start_h) {
    OrderedPartition pg = start_g ? std::move(*start_g) : OrderedPartition::trivial(g.n, k);
    OrderedPartition ph = start_h ? std::move(*start_h) : OrderedPartition::trivial(h.n, k);

    auto fix = [&](RelationKind kind, const Graph& gr, const OrderedPartition& p) {
        return refine_fixpoint(signature_fn(kind), gr, p).partition;
    };
    OrderedPartition wg = fix(RelationKind::WL, g, pg), wh = fix(RelationKind::WL, h, ph);
    OrderedPartition dg = fix(RelationKind::DeltaSmall, g, pg),
                     dh = fix(RelationKind::DeltaSmall, h, ph);
    OrderedPartition Dg = fix(RelationKind::DeltaBig, g, pg),
                     Dh = fix(RelationKind::DeltaBig, h, ph);

    ChainReport rep;
    rep.wl_equiv = equiv_check(RelationKind::WL, g, wg, h, wh);
    rep.delta_equiv = equiv_check(RelationKind::DeltaSmall, g, dg, h, dh);
    rep.delta_big_equiv = equiv_check(RelationKind::DeltaBig, g, Dg, h, Dh);
    rep.wl_cells_left = wg.num_cells();
    rep.delta_cells_left = dg.num_cells();
    rep.delta_big_cells_left = Dg.num_cells();

    // The wl relation only carries adjacency information for k >= 2; its
    // implications are claimed for k > 1 only.
    const bool wl_meaningful = (k >= 2);
    rep.implications_hold = (!wl_meaningful || !rep.wl_equiv || rep.delta_equiv) &&
                            (!rep.delta_equiv || rep.delta_big_equiv);
    // The pair refinement chain is claimed under the matching equivalence.
    rep.pair_chain_holds = (!wl_meaningful || !rep.wl_equiv || pair_refines(wg, wh, dg, dh)) &&
                           (!rep.delta_equiv || pair_refines(dg, dh, Dg, Dh));
    rep.single_graph_chains_hold = refines(dg, Dg) && refines(dh, Dh) &&
                                   (!wl_meaningful ||
                                    (refines(wg, dg) && refines(wh, dh)));
    return rep;
}

RhoNuReport rho_nu_correspondence_check(const Graph& g, int k,
                                        std::optional<OrderedPartition> start) {
    if (k < 2) throw std::invalid_argument("rho_nu_correspondence_check: k must be >= 2");
    OrderedPartition p = start ? std::move(*start) : OrderedPartition::trivial(g.n, k);
    OrderedPartition wl_fix = refine_fixpoint(signature_fn(RelationKind::WL), g, p).partition;
    OrderedPartition lifted = partition_nu(p);
    OrderedPartition big_fix =
        refine_fixpoint(signature_fn(RelationKind::DeltaBig), g, lifted).partition;
    OrderedPartition projected = partition_rho(big_fix);

    RhoNuReport rep;
    rep.wl_cells = wl_fix.num_cells();
    rep.projected_cells = projected.num_cells();
    rep.unordered_equal = same_unordered(projected, wl_fix);
    return rep;
}

RhoNuIsoReport rho_nu_iso_check(const Graph& g, const Graph& h, int k) {
    if (k < 2) throw std::invalid_argument("rho_nu_iso_check: k must be >= 2");
    RhoNuIsoReport rep;
    rep.wl_equiv = iso_run(RelationKind::WL, g, h, k).verdict == IsoVerdict::Undecided;
    rep.delta_big_equiv =
        iso_run(RelationKind::DeltaBig, g, h, k + 1).verdict == IsoVerdict::Undecided;
    return rep;
}

}  // namespace vcpoly
