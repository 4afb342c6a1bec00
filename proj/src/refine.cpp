#include "vcpoly/refine.hpp"

#include <algorithm>
#include <stdexcept>

namespace vcpoly {

OrderedPartition refine_round(const SignatureFn& sig, const Graph& g, const OrderedPartition& p) {
    const long total = p.num_tuples();
    std::vector<Signature> sigs(total);
    for (long c = 0; c < total; ++c) {
        sigs[c] = sig(g, p, static_cast<int>(c));
        if (sigs[c].empty() || sigs[c][0] != p.cell_of[c])
            throw std::logic_error("refine_round: signature must lead with the cell index");
    }
    std::vector<std::int32_t> order(total);
    for (long c = 0; c < total; ++c) order[c] = static_cast<std::int32_t>(c);
    std::sort(order.begin(), order.end(), [&](std::int32_t a, std::int32_t b) {
        if (sigs[a] != sigs[b]) return sigs[a] < sigs[b];
        return a < b;
    });

    OrderedPartition out;
    out.n = p.n;
    out.k = p.k;
    out.cell_of.assign(total, 0);
    for (long i = 0; i < total; ++i) {
        if (i == 0 || sigs[order[i]] != sigs[order[i - 1]]) out.cells.emplace_back();
        out.cells.back().push_back(order[i]);
        out.cell_of[order[i]] = static_cast<std::int32_t>(out.cells.size()) - 1;
    }
    return out;
}

FixpointResult refine_fixpoint(const SignatureFn& sig, const Graph& g,
                               const OrderedPartition& p) {
    FixpointResult r;
    r.partition = p;
    const long cap = p.num_tuples() + 1;
    for (long round = 0; round <= cap; ++round) {
        OrderedPartition next = refine_round(sig, g, r.partition);
        if (next == r.partition) return r;
        r.partition = std::move(next);
        ++r.rounds;
    }
    // Unreachable while rounds split at least one cell each.
    throw std::logic_error("refine_fixpoint: exceeded the n^k iteration cap");
}

Signature substitution_column(const OrderedPartition& p, const Tuple& u, int w) {
    const int k = static_cast<int>(u.size());
    Signature col(k);
    int stride = 1;
    const int base = tuple_code(u, p.n);
    for (int i = k - 1; i >= 0; --i) {
        col[i] = p.cell_of[phi_code(base, u[i], w, stride)];
        stride *= p.n;
    }
    return col;
}

OrderedPartition partition_rho(const OrderedPartition& p) {
    if (p.k < 2) throw std::invalid_argument("partition_rho: k must be >= 2");
    const long total = pow_long(p.n, p.k - 1);
    std::vector<std::int64_t> labels(total);
    for (long c = 0; c < total; ++c) {
        // nu-lift of the (k-1)-tuple coded c: append its last entry again.
        const int last = static_cast<int>(c % p.n);
        labels[c] = p.cell_of[c * p.n + last];
    }
    return OrderedPartition::from_labels(p.n, p.k - 1, labels);
}

OrderedPartition partition_nu(const OrderedPartition& p) {
    const long total = pow_long(p.n, p.k + 1);
    std::vector<Signature> keys(total);
    for (long c = 0; c < total; ++c) {
        const int prefix = static_cast<int>(c / p.n);
        const int w = static_cast<int>(c % p.n);
        Signature key;
        key.push_back(p.cell_of[prefix]);
        Signature col = substitution_column(p, tuple_decode(prefix, p.n, p.k), w);
        key.insert(key.end(), col.begin(), col.end());
        keys[c] = std::move(key);
    }
    std::vector<std::int32_t> order(total);
    for (long c = 0; c < total; ++c) order[c] = static_cast<std::int32_t>(c);
    std::sort(order.begin(), order.end(), [&](std::int32_t a, std::int32_t b) {
        if (keys[a] != keys[b]) return keys[a] < keys[b];
        return a < b;
    });
    std::vector<std::vector<std::int32_t>> cells;
    for (long i = 0; i < total; ++i) {
        if (i == 0 || keys[order[i]] != keys[order[i - 1]]) cells.emplace_back();
        cells.back().push_back(order[i]);
    }
    return OrderedPartition::from_cells(p.n, p.k + 1, std::move(cells));
}

}  // namespace vcpoly
