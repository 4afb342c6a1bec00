#include "vcpoly/builders.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <tuple>

namespace vcpoly {

std::string flavor_name(SystemFlavor f) {
    switch (f) {
        case SystemFlavor::Birkhoff: return "b";
        case SystemFlavor::Tinhofer: return "t";
        case SystemFlavor::QPoly: return "q";
        case SystemFlavor::Custom: return "custom";
    }
    return "?";
}

namespace {

std::vector<VarSet> enumerate_consistent(int n, int k) {
    std::vector<VarSet> out;
    out.push_back(VarSet{});
    std::vector<std::pair<int, int>> cur;
    std::vector<char> right_used(n, 0);
    std::function<void(int)> rec = [&](int min_left) {
        if (static_cast<int>(cur.size()) == k) return;
        for (int a = min_left; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                if (right_used[b]) continue;
                cur.emplace_back(a, b);
                right_used[b] = 1;
                out.push_back(VarSet{cur});
                rec(a + 1);
                cur.pop_back();
                right_used[b] = 0;
            }
    };
    rec(0);
    std::sort(out.begin(), out.end(), [](const VarSet& x, const VarSet& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return x.pairs < y.pairs;
    });
    return out;
}

long count_subsets_upto(int n2, int k) {
    // sum_{s<=k} C(n2, s)
    Int total = 0;
    for (int s = 0; s <= k; ++s) {
        Int binom = 1;
        for (int i = 0; i < s; ++i) binom = binom * (n2 - i) / (i + 1);
        total += binom;
    }
    return total.get_si();
}

// Accumulates rows with canonical-form deduplication.
class RowAccum {
public:
    explicit RowAccum(LinearSystem& sys) : sys_(sys) {}

    void add(RowRel rel, const std::map<std::int32_t, Rat>& terms, const Rat& rhs,
             std::string label) {
        Row row;
        row.rel = rel;
        row.rhs = rhs;
        row.label = std::move(label);
        for (const auto& [c, coef] : terms)
            if (coef != 0) row.terms.emplace_back(c, coef);
        if (row.terms.empty()) {
            if (rhs != 0) throw std::logic_error("builder produced an empty contradictory row");
            return;
        }
        if (seen_.insert(canonical(row)).second) sys_.rows.push_back(std::move(row));
    }

private:
    using Key = std::tuple<int, std::vector<std::pair<std::int32_t, Int>>, Int>;

    static Key canonical(const Row& row) {
        Int den = 1;
        for (const auto& [c, coef] : row.terms) den = lcm(den, Int(coef.get_den()));
        den = lcm(den, Int(row.rhs.get_den()));
        std::vector<std::pair<std::int32_t, Int>> ints;
        ints.reserve(row.terms.size());
        Int g = 0;
        for (const auto& [c, coef] : row.terms) {
            Rat scaled = coef * Rat(den);
            ints.emplace_back(c, Int(scaled.get_num()));
            g = gcd(g, ints.back().second);
        }
        Rat rsc = row.rhs * Rat(den);
        Int rhs_int(rsc.get_num());
        g = gcd(g, rhs_int);
        if (g > 1) {
            for (auto& [c, v] : ints) v /= g;
            rhs_int /= g;
        }
        // Equalities may be flipped; normalize the leading sign.
        if (row.rel == RowRel::Eq && sgn(ints.front().second) < 0) {
            for (auto& [c, v] : ints) v = -v;
            rhs_int = -rhs_int;
        }
        return {static_cast<int>(row.rel), std::move(ints), std::move(rhs_int)};
    }

    LinearSystem& sys_;
    std::set<Key> seen_;
};

LinearSystem base_system(int n, int k, SystemFlavor flavor) {
    if (n < 1 || k < 1) throw std::invalid_argument("system builder: n, k must be >= 1");
    LinearSystem sys;
    sys.n = n;
    sys.k = k;
    sys.flavor = flavor;
    sys.vars = enumerate_consistent(n, k);
    for (std::int32_t c = 0; c < static_cast<std::int32_t>(sys.vars.size()); ++c)
        sys.index[sys.vars[c]] = c;
    sys.prezeroed_count = count_subsets_upto(n * n, k) - sys.num_vars();
    return sys;
}

bool in_lefts(const VarSet& vs, int a) {
    for (auto [x, y] : vs.pairs)
        if (x == a) return true;
    return false;
}
bool in_rights(const VarSet& vs, int b) {
    for (auto [x, y] : vs.pairs)
        if (y == b) return true;
    return false;
}

void add_completion_rows(LinearSystem& sys, RowAccum& acc) {
    const int n = sys.n;
    acc.add(RowRel::Eq, {{0, Rat(1)}}, Rat(1), "unit");
    for (std::int32_t base = 0; base < sys.num_vars(); ++base) {
        const VarSet& I = sys.vars[base];
        if (static_cast<int>(I.size()) > sys.k - 1) continue;
        for (int u = 0; u < n; ++u) {
            if (in_lefts(I, u)) continue;  // the row collapses to Y_I = Y_I
            std::map<std::int32_t, Rat> terms;
            for (int w = 0; w < n; ++w) {
                auto ext = I.pairs;
                ext.emplace_back(u, w);
                if (auto vs = canon_varset(std::move(ext))) terms[*sys.column(*vs)] += 1;
            }
            terms[base] += -1;
            acc.add(RowRel::Eq, terms, Rat(0), "row:" + I.name() + ":u" + std::to_string(u + 1));
        }
        for (int v = 0; v < n; ++v) {
            if (in_rights(I, v)) continue;
            std::map<std::int32_t, Rat> terms;
            for (int w = 0; w < n; ++w) {
                auto ext = I.pairs;
                ext.emplace_back(w, v);
                if (auto vs = canon_varset(std::move(ext))) terms[*sys.column(*vs)] += 1;
            }
            terms[base] += -1;
            acc.add(RowRel::Eq, terms, Rat(0), "col:" + I.name() + ":v" + std::to_string(v + 1));
        }
    }
}

}  // namespace

LinearSystem build_birkhoff(int n, int k) {
    LinearSystem sys = base_system(n, k, SystemFlavor::Birkhoff);
    RowAccum acc(sys);
    add_completion_rows(sys, acc);
    return sys;
}

LinearSystem build_tinhofer(const Graph& g, const Graph& h, int k) {
    if (g.n != h.n) throw std::invalid_argument("build_tinhofer: graphs must share n");
    LinearSystem sys = base_system(g.n, k, SystemFlavor::Tinhofer);
    RowAccum acc(sys);
    add_completion_rows(sys, acc);
    const int n = g.n;
    for (std::int32_t base = 0; base < sys.num_vars(); ++base) {
        const VarSet& I = sys.vars[base];
        if (static_cast<int>(I.size()) > sys.k - 1) continue;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) {
                std::map<std::int32_t, Rat> terms;
                for (int w : h.adj[v]) {
                    auto ext = I.pairs;
                    ext.emplace_back(u, w);
                    if (auto vs = canon_varset(std::move(ext))) terms[*sys.column(*vs)] += 1;
                }
                for (int w : g.adj[u]) {
                    auto ext = I.pairs;
                    ext.emplace_back(w, v);
                    if (auto vs = canon_varset(std::move(ext))) terms[*sys.column(*vs)] += -1;
                }
                acc.add(RowRel::Eq, terms, Rat(0),
                        "nbr:" + I.name() + ":u" + std::to_string(u + 1) + "v" +
                            std::to_string(v + 1));
            }
    }
    return sys;
}

LinearSystem build_qpoly(const Graph& g, const Graph& h, int k) {
    if (g.n != h.n) throw std::invalid_argument("build_qpoly: graphs must share n");
    LinearSystem sys = base_system(g.n, k, SystemFlavor::QPoly);
    RowAccum acc(sys);
    add_completion_rows(sys, acc);
    for (std::int32_t c = 0; c < sys.num_vars(); ++c) {
        const VarSet& vs = sys.vars[c];
        if (vs.size() < 2) continue;
        bool mismatched = false;
        for (size_t i = 0; i < vs.size() && !mismatched; ++i)
            for (size_t j = i + 1; j < vs.size() && !mismatched; ++j) {
                const auto [a1, b1] = vs.pairs[i];
                const auto [a2, b2] = vs.pairs[j];
                if (g.has_edge(a1, a2) != h.has_edge(b1, b2)) mismatched = true;
            }
        if (mismatched) acc.add(RowRel::Eq, {{c, Rat(1)}}, Rat(0), "zero:" + vs.name());
    }
    return sys;
}

LinearSystem restrict_to_partition(const LinearSystem& sys, const OrderedPartition& pi,
                                   const OrderedPartition& tau) {
    if (pi.n != sys.n || tau.n != sys.n || pi.k != sys.k || tau.k != sys.k)
        throw std::invalid_argument("restrict_to_partition: partition arity mismatch");
    LinearSystem out = sys;
    RowAccum acc(out);
    // Re-register existing rows so new zero rows dedup against them.
    out.rows.clear();
    for (const Row& row : sys.rows) {
        std::map<std::int32_t, Rat> terms(row.terms.begin(), row.terms.end());
        acc.add(row.rel, terms, row.rhs, row.label);
    }
    for (std::int32_t c = 0; c < out.num_vars(); ++c) {
        const VarSet& vs = out.vars[c];
        if (vs.empty()) continue;
        bool any_matched = false;
        for (const auto& [u, v] : pairings_of(vs, sys.k)) {
            const std::int32_t cu = pi.cell_of[tuple_code(u, sys.n)];
            const std::int32_t cv = tau.cell_of[tuple_code(v, sys.n)];
            if (cu == cv) {
                any_matched = true;
                break;
            }
        }
        if (!any_matched) acc.add(RowRel::Eq, {{c, Rat(1)}}, Rat(0), "pzero:" + vs.name());
    }
    return out;
}

ExtendedPoint uniform_point(const OrderedPartition& pi, const OrderedPartition& tau, int k) {
    if (pi.n != tau.n || pi.k != tau.k || pi.k != k)
        throw std::invalid_argument("uniform_point: partition arity mismatch");
    const int n = pi.n;
    const long total = pow_long(n, k);
    ExtendedPoint pt;
    pt.values[VarSet{}] = 1;
    for (long cu = 0; cu < total; ++cu) {
        const Tuple u = tuple_decode(static_cast<int>(cu), n, k);
        for (long cv = 0; cv < total; ++cv) {
            const Tuple v = tuple_decode(static_cast<int>(cv), n, k);
            auto vs = tuple_pairing(u, v);
            if (!vs) continue;
            Rat value = 0;
            const std::int32_t s = pi.cell_of[cu];
            if (s == tau.cell_of[cv]) {
                if (pi.cells[s].size() != tau.cells[s].size())
                    throw UniformPointError("uniform_point: matched cells of different size at " +
                                                vs->name(),
                                            *vs);
                value = Rat(1) / Rat(static_cast<long>(pi.cells[s].size()));
            }
            auto [it, fresh] = pt.values.emplace(*vs, value);
            if (!fresh && it->second != value)
                throw UniformPointError("uniform_point: variable " + vs->name() +
                                            " received two values; the pair is not stable-equivalent",
                                        *vs);
        }
    }
    return pt;
}

ExtendedPoint lift_permutation(const LinearSystem& sys, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != sys.n)
        throw std::invalid_argument("lift_permutation: size mismatch");
    ExtendedPoint pt;
    for (const VarSet& vs : sys.vars) {
        bool follows = true;
        for (auto [a, b] : vs.pairs)
            if (perm[a] != b) {
                follows = false;
                break;
            }
        pt.values[vs] = follows ? 1 : 0;
    }
    return pt;
}

ExtendedPoint extended_identity(const LinearSystem& sys) {
    std::vector<int> id(sys.n);
    for (int i = 0; i < sys.n; ++i) id[i] = i;
    return lift_permutation(sys, id);
}

}  // namespace vcpoly
