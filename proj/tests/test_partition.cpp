#include <doctest.h>

#include <algorithm>
#include <random>

#include "vcpoly/oracle.hpp"
#include "vcpoly/partition.hpp"
#include "vcpoly/refine.hpp"
#include "vcpoly/relations.hpp"

using namespace vcpoly;

namespace {

// Builds a cell of tuple codes from 1-based tuples.
std::vector<std::int32_t> cell(std::vector<Tuple> tuples, int n) {
    std::vector<std::int32_t> out;
    for (Tuple t : tuples) {
        for (int& e : t) --e;
        out.push_back(static_cast<std::int32_t>(tuple_code(t, n)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

UnorderedPartition paper_wl2_cells() {
    const int n = 4;
    UnorderedPartition cells = {
        cell({{2, 2}}, n),
        cell({{3, 3}, {4, 4}}, n),
        cell({{1, 1}}, n),
        cell({{3, 4}, {4, 3}}, n),
        cell({{3, 2}, {4, 2}}, n),
        cell({{2, 3}, {2, 4}}, n),
        cell({{2, 1}}, n),
        cell({{1, 2}}, n),
        cell({{1, 3}, {1, 4}}, n),
        cell({{3, 1}, {4, 1}}, n),
    };
    std::sort(cells.begin(), cells.end());
    return cells;
}

}  // namespace

TEST_CASE("trivial partitions") {
    OrderedPartition p = OrderedPartition::trivial(4, 2);
    CHECK(p.num_cells() == 1);
    CHECK(p.cells[0].size() == 16);
    CHECK(OrderedPartition::trivial(1, 3).cells[0].size() == 1);
    CHECK(OrderedPartition::trivial(2, 1).cells[0].size() == 2);
}

TEST_CASE("comparison predicates") {
    OrderedPartition triv = OrderedPartition::trivial(3, 1);
    std::vector<std::int64_t> labels{0, 1, 2};
    OrderedPartition complete = OrderedPartition::from_labels(3, 1, labels);

    CHECK(refines(triv, triv));
    CHECK(same_unordered(triv, triv));
    CHECK(balanced(triv, triv));
    CHECK(refines(complete, triv));
    CHECK_FALSE(refines(triv, complete));
    CHECK_FALSE(same_unordered(triv, complete));
}

TEST_CASE("pair refinement compares matched cell indices") {
    OrderedPartition triv = OrderedPartition::trivial(2, 1);
    OrderedPartition complete = OrderedPartition::from_labels(2, 1, {0, 1});
    CHECK(pair_refines(complete, complete, triv, triv));
    CHECK_FALSE(pair_refines(triv, triv, complete, complete));
    // Crossed pair: [u]=["swapped" v] matched cells map to different cells.
    OrderedPartition swapped = OrderedPartition::from_labels(2, 1, {1, 0});
    CHECK(pair_refines(complete, swapped, triv, triv));
    CHECK_FALSE(pair_refines(complete, swapped, complete, complete));
}

TEST_CASE("refine_round splits the diagonal cell of the example like the worked run") {
    Graph g = example_graph();
    // One Comb round from trivial gives the subgraph-type partition.
    OrderedPartition p1 =
        refine_round(signature_fn(RelationKind::Comb), g, OrderedPartition::trivial(4, 2));
    CHECK(p1.num_cells() == 3);
    // A WL round then leaves (1,1) and (2,2) alone in new cells while
    // (3,3),(4,4) stay together.
    OrderedPartition p2 = refine_round(signature_fn(RelationKind::WL), g, p1);
    auto cells = unordered_cells(p2);
    auto has_cell = [&](std::vector<std::int32_t> c) {
        return std::find(cells.begin(), cells.end(), c) != cells.end();
    };
    CHECK(has_cell(cell({{1, 1}}, 4)));
    CHECK(has_cell(cell({{2, 2}}, 4)));
    CHECK(has_cell(cell({{3, 3}, {4, 4}}, 4)));
}

TEST_CASE("refine_round is a no-op on complete partitions and under constant signatures") {
    Graph g = example_graph();
    std::vector<std::int64_t> labels(16);
    for (int i = 0; i < 16; ++i) labels[i] = i;
    OrderedPartition complete = OrderedPartition::from_labels(4, 2, labels);
    CHECK(refine_round(signature_fn(RelationKind::WL), g, complete) == complete);

    SignatureFn constant = [](const Graph&, const OrderedPartition& p, int code) {
        return Signature{p.cell_of[code]};
    };
    OrderedPartition triv = OrderedPartition::trivial(4, 2);
    CHECK(refine_round(constant, g, triv) == triv);
}

TEST_CASE("wl fixpoint of the example graph has the ten listed cells") {
    Graph g = example_graph();
    FixpointResult r =
        refine_fixpoint(signature_fn(RelationKind::WL), g, OrderedPartition::trivial(4, 2));
    CHECK(r.partition.num_cells() == 10);
    CHECK(unordered_cells(r.partition) == paper_wl2_cells());
    // Refines the 3-cell subgraph-type partition.
    OrderedPartition p1 =
        refine_round(signature_fn(RelationKind::Comb), g, OrderedPartition::trivial(4, 2));
    CHECK(refines(r.partition, p1));
}

TEST_CASE("neighbor-count fixpoints at k=1") {
    // Regular graph: stays trivial.
    Graph k4 = complete_graph(4);
    FixpointResult r =
        refine_fixpoint(signature_fn(RelationKind::DeltaSmall), k4, OrderedPartition::trivial(4, 1));
    CHECK(r.partition.num_cells() == 1);

    // Example graph: degree classes 1/2/3 in ascending order.
    Graph g = example_graph();
    FixpointResult s =
        refine_fixpoint(signature_fn(RelationKind::DeltaSmall), g, OrderedPartition::trivial(4, 1));
    CHECK(s.partition.cells ==
          std::vector<std::vector<std::int32_t>>{{0}, {2, 3}, {1}});
}

TEST_CASE("fixpoint round counts stay within the cap") {
    Graph g = path_graph(5);
    FixpointResult r =
        refine_fixpoint(signature_fn(RelationKind::DeltaSmall), g, OrderedPartition::trivial(5, 1));
    CHECK(r.rounds <= 5);
    CHECK(is_stable(RelationKind::DeltaSmall, g, r.partition));
}

TEST_CASE("refine_round is monotone and order-preserving") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 2 + static_cast<int>(rng() % 3);
        std::vector<std::pair<int, int>> es;
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v)
                if (rng() & 1) es.emplace_back(u, v);
        Graph g = make_graph(n, es);
        int k = 1 + static_cast<int>(rng() % 2);
        // Random starting partition via random labels.
        long total = pow_long(n, k);
        std::vector<std::int64_t> labels(total);
        for (auto& l : labels) l = static_cast<std::int64_t>(rng() % 3);
        OrderedPartition p = OrderedPartition::from_labels(n, k, labels);
        for (RelationKind kind : {RelationKind::DeltaSmall, RelationKind::DeltaBig,
                                  RelationKind::WL}) {
            OrderedPartition q = refine_round(signature_fn(kind), g, p);
            CHECK(refines(q, p));
            // Coarser input refines to coarser output (unordered level).
            OrderedPartition triv = OrderedPartition::trivial(n, k);
            OrderedPartition qt = refine_round(signature_fn(kind), g, triv);
            CHECK(refines(q, qt));
        }
    }
}

TEST_CASE("fixpoint is the unique coarsest stable partition finer than the start") {
    // Brute force over the whole partition lattice of V, n = 3, k = 1.
    Graph g = path_graph(3);
    const int n = 3;
    std::vector<std::vector<std::int64_t>> all_label_vectors;
    // Enumerate set partitions of {0,1,2} by restricted growth strings.
    all_label_vectors = {{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {0, 1, 1}, {0, 1, 2}};
    for (RelationKind kind : {RelationKind::DeltaSmall, RelationKind::DeltaBig}) {
        for (const auto& labels : all_label_vectors) {
            OrderedPartition p = OrderedPartition::from_labels(n, 1, labels);
            OrderedPartition fix = refine_fixpoint(signature_fn(kind), g, p).partition;
            CHECK(is_stable(kind, g, fix));
            CHECK(refines(fix, p));
            // Every stable partition finer than p is finer than fix.
            for (const auto& other : all_label_vectors) {
                OrderedPartition q = OrderedPartition::from_labels(n, 1, other);
                if (is_stable(kind, g, q) && refines(q, p)) CHECK(refines(q, fix));
            }
        }
    }
}

TEST_CASE("orbit partitions are stable under every relation") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 12; ++trial) {
        int n = 2 + static_cast<int>(rng() % 3);
        std::vector<std::pair<int, int>> es;
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v)
                if (rng() & 1) es.emplace_back(u, v);
        Graph g = make_graph(n, es);
        for (int k = 1; k <= 2; ++k) {
            UnorderedPartition orbits = orbit_partition(g, k);
            OrderedPartition p = OrderedPartition::from_cells(n, k, orbits);
            for (RelationKind kind :
                 {RelationKind::Comb, RelationKind::Sym, RelationKind::DeltaSmall,
                  RelationKind::DeltaBig, RelationKind::WL}) {
                OrderedPartition q = refine_round(signature_fn(kind), g, p);
                CHECK(same_unordered(p, q));
            }
        }
    }
}

TEST_CASE("partition rho and nu") {
    Graph g = example_graph();
    OrderedPartition wl2 =
        refine_fixpoint(signature_fn(RelationKind::WL), g, OrderedPartition::trivial(4, 2))
            .partition;

    SUBCASE("rho(nu(p)) is finer than p, with equality at DeltaBig-stable p") {
        OrderedPartition triv = OrderedPartition::trivial(4, 2);
        CHECK(refines(partition_rho(partition_nu(triv)), triv));
        OrderedPartition big =
            refine_fixpoint(signature_fn(RelationKind::DeltaBig), g, triv).partition;
        CHECK(partition_rho(partition_nu(big)) == big);
    }

    SUBCASE("rho maps diagonal singletons to singletons") {
        std::vector<std::int64_t> labels(16);
        for (int i = 0; i < 16; ++i) labels[i] = i;
        OrderedPartition complete = OrderedPartition::from_labels(4, 2, labels);
        OrderedPartition r = partition_rho(complete);
        CHECK(r.k == 1);
        // (a,a) cells project to the singletons {a}.
        CHECK(r.complete());
    }

    SUBCASE("projecting the lifted fixpoint recovers the wl fixpoint") {
        OrderedPartition lifted = partition_nu(OrderedPartition::trivial(4, 2));
        OrderedPartition big =
            refine_fixpoint(signature_fn(RelationKind::DeltaBig), g, lifted).partition;
        CHECK(same_unordered(partition_rho(big), wl2));
    }

    CHECK_THROWS_AS(partition_rho(OrderedPartition::trivial(3, 1)), std::invalid_argument);
}

TEST_CASE("partition JSON round-trips and is deterministic") {
    Graph g = example_graph();
    OrderedPartition p =
        refine_fixpoint(signature_fn(RelationKind::WL), g, OrderedPartition::trivial(4, 2))
            .partition;
    std::string j = partition_to_json(p);
    CHECK(j == partition_to_json(p));
    OrderedPartition q = partition_from_json(j, 4);
    CHECK(p == q);
}
