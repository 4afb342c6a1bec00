#include "vcpoly/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace vcpoly {

OrderedPartition OrderedPartition::trivial(int n, int k) {
    if (n < 1 || k < 1) throw std::invalid_argument("trivial: n, k must be >= 1");
    OrderedPartition p;
    p.n = n;
    p.k = k;
    const long total = pow_long(n, k);
    p.cell_of.assign(total, 0);
    p.cells.resize(1);
    p.cells[0].resize(total);
    std::iota(p.cells[0].begin(), p.cells[0].end(), 0);
    return p;
}

OrderedPartition OrderedPartition::from_cells(int n, int k,
                                              std::vector<std::vector<std::int32_t>> cells) {
    OrderedPartition p;
    p.n = n;
    p.k = k;
    const long total = pow_long(n, k);
    p.cell_of.assign(total, -1);
    for (size_t i = 0; i < cells.size(); ++i) {
        if (cells[i].empty()) throw std::invalid_argument("from_cells: empty cell");
        std::sort(cells[i].begin(), cells[i].end());
        for (std::int32_t code : cells[i]) {
            if (code < 0 || code >= total) throw std::invalid_argument("from_cells: code out of range");
            if (p.cell_of[code] != -1) throw std::invalid_argument("from_cells: cells overlap");
            p.cell_of[code] = static_cast<std::int32_t>(i);
        }
    }
    for (long c = 0; c < total; ++c)
        if (p.cell_of[c] == -1) throw std::invalid_argument("from_cells: cells do not cover V^k");
    p.cells = std::move(cells);
    return p;
}

OrderedPartition OrderedPartition::from_labels(int n, int k,
                                               const std::vector<std::int64_t>& labels) {
    const long total = pow_long(n, k);
    if (static_cast<long>(labels.size()) != total)
        throw std::invalid_argument("from_labels: wrong size");
    std::map<std::int64_t, std::vector<std::int32_t>> groups;
    for (long c = 0; c < total; ++c) groups[labels[c]].push_back(static_cast<std::int32_t>(c));
    std::vector<std::vector<std::int32_t>> cells;
    cells.reserve(groups.size());
    for (auto& [lab, cell] : groups) cells.push_back(std::move(cell));
    return from_cells(n, k, std::move(cells));
}

std::vector<std::vector<std::int32_t>> unordered_cells(const OrderedPartition& p) {
    auto cells = p.cells;  // already internally sorted
    std::sort(cells.begin(), cells.end());
    return cells;
}

bool refines(const OrderedPartition& fine, const OrderedPartition& coarse) {
    if (fine.n != coarse.n || fine.k != coarse.k)
        throw std::invalid_argument("refines: arity mismatch");
    for (const auto& cell : fine.cells) {
        const std::int32_t target = coarse.cell_of[cell[0]];
        for (std::int32_t code : cell)
            if (coarse.cell_of[code] != target) return false;
    }
    return true;
}

bool same_unordered(const OrderedPartition& a, const OrderedPartition& b) {
    if (a.n != b.n || a.k != b.k) throw std::invalid_argument("same_unordered: arity mismatch");
    return unordered_cells(a) == unordered_cells(b);
}

bool balanced(const OrderedPartition& a, const OrderedPartition& b) {
    if (a.k != b.k) throw std::invalid_argument("balanced: arity mismatch");
    if (a.num_cells() != b.num_cells()) return false;
    for (int i = 0; i < a.num_cells(); ++i)
        if (a.cells[i].size() != b.cells[i].size()) return false;
    return true;
}

bool pair_refines(const OrderedPartition& pi, const OrderedPartition& tau,
                  const OrderedPartition& pi2, const OrderedPartition& tau2) {
    if (pi.k != tau.k || pi.k != pi2.k || pi.k != tau2.k)
        throw std::invalid_argument("pair_refines: arity mismatch");
    // [u]_pi = [v]_tau = i is possible only for shared indices i.
    const int shared = std::min(pi.num_cells(), tau.num_cells());
    for (int i = 0; i < shared; ++i) {
        std::int32_t a = pi2.cell_of[pi.cells[i][0]];
        std::int32_t b = tau2.cell_of[tau.cells[i][0]];
        if (a != b) return false;
        for (std::int32_t code : pi.cells[i])
            if (pi2.cell_of[code] != a) return false;
        for (std::int32_t code : tau.cells[i])
            if (tau2.cell_of[code] != b) return false;
    }
    return true;
}

std::string partition_to_json(const OrderedPartition& p) {
    nlohmann::json j;
    j["k"] = p.k;
    nlohmann::json cells = nlohmann::json::array();
    for (const auto& cell : p.cells) {
        nlohmann::json jc = nlohmann::json::array();
        for (std::int32_t code : cell) {
            Tuple t = tuple_decode(code, p.n, p.k);
            for (int& e : t) ++e;
            jc.push_back(t);
        }
        cells.push_back(std::move(jc));
    }
    j["cells"] = std::move(cells);
    return j.dump();
}

OrderedPartition partition_from_json(const std::string& text, int n) {
    nlohmann::json j = nlohmann::json::parse(text);
    const int k = j.at("k").get<int>();
    std::vector<std::vector<std::int32_t>> cells;
    for (const auto& jc : j.at("cells")) {
        std::vector<std::int32_t> cell;
        for (const auto& jt : jc) {
            Tuple t = jt.get<Tuple>();
            if (static_cast<int>(t.size()) != k)
                throw std::invalid_argument("partition_from_json: tuple arity mismatch");
            for (int& e : t) {
                if (e < 1 || e > n) throw std::invalid_argument("partition_from_json: vertex out of range");
                --e;
            }
            cell.push_back(static_cast<std::int32_t>(tuple_code(t, n)));
        }
        cells.push_back(std::move(cell));
    }
    return OrderedPartition::from_cells(n, k, std::move(cells));
}

}  // namespace vcpoly
