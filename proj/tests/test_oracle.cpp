#include <doctest.h>

#include <random>

#include "vcpoly/oracle.hpp"
#include "vcpoly/relations.hpp"

using namespace vcpoly;

namespace {

std::vector<std::int32_t> cell1(std::vector<Tuple> tuples, int n) {
    std::vector<std::int32_t> out;
    for (Tuple t : tuples) {
        for (int& e : t) --e;
        out.push_back(static_cast<std::int32_t>(tuple_code(t, n)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("enumerate_iso finds the two automorphisms of the example graph") {
    Graph g = example_graph();
    auto auts = enumerate_iso(g, g);
    REQUIRE(auts.size() == 2);
    CHECK(auts[0] == Perm{0, 1, 2, 3});
    CHECK(auts[1] == Perm{0, 1, 3, 2});  // swaps vertices 3 and 4

    CHECK(enumerate_iso(cycle_graph(6), two_triangles()).empty());
    CHECK(enumerate_iso(complete_graph(3), complete_graph(3)).size() == 6);
    CHECK_THROWS_AS(enumerate_iso(empty_graph(9), empty_graph(9)), std::invalid_argument);
}

TEST_CASE("enumerate_iso respects given partitions") {
    Graph g = example_graph();
    // Separate 3 from 4: only the identity respects the cells.
    OrderedPartition pi = OrderedPartition::from_labels(4, 1, {0, 0, 1, 2});
    CHECK(enumerate_iso(g, g, &pi, &pi).size() == 1);
}

TEST_CASE("orbit partition of the example graph at k=2 matches the listed ten orbits") {
    Graph g = example_graph();
    UnorderedPartition orbits = orbit_partition(g, 2);
    const int n = 4;
    UnorderedPartition expected = {
        cell1({{1, 1}}, n),         cell1({{2, 2}}, n),
        cell1({{3, 3}, {4, 4}}, n), cell1({{1, 2}}, n),
        cell1({{2, 1}}, n),         cell1({{1, 3}, {1, 4}}, n),
        cell1({{3, 1}, {4, 1}}, n), cell1({{2, 3}, {2, 4}}, n),
        cell1({{3, 2}, {4, 2}}, n), cell1({{3, 4}, {4, 3}}, n),
    };
    std::sort(expected.begin(), expected.end());
    CHECK(orbits == expected);
}

TEST_CASE("orbit partition edge cases") {
    CHECK(orbit_partition(complete_graph(2), 1) == UnorderedPartition{{0, 1}});
    // Asymmetric graph: complete partition at every k.
    Graph g = make_graph(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 3}, {1, 6}});
    if (enumerate_iso(g, g).size() == 1) {
        UnorderedPartition o = orbit_partition(g, 2);
        CHECK(o.size() == 36);
    }
    CHECK_THROWS_AS(orbit_partition(complete_graph(2), 4), std::invalid_argument);
}

TEST_CASE("naive_wl agrees with the engine's wl fixpoint") {
    std::mt19937_64 rng(41);
    // All labeled graphs on 3 vertices plus random 4-vertex samples.
    std::vector<Graph> graphs;
    for (int mask = 0; mask < 8; ++mask) {
        std::vector<std::pair<int, int>> es;
        int bit = 0;
        for (int u = 1; u <= 3; ++u)
            for (int v = u + 1; v <= 3; ++v, ++bit)
                if (mask & (1 << bit)) es.emplace_back(u, v);
        graphs.push_back(make_graph(3, es));
    }
    for (int t = 0; t < 10; ++t) {
        std::vector<std::pair<int, int>> es;
        for (int u = 1; u <= 4; ++u)
            for (int v = u + 1; v <= 4; ++v)
                if (rng() & 1) es.emplace_back(u, v);
        graphs.push_back(make_graph(4, es));
    }
    for (const Graph& g : graphs) {
        UnorderedPartition naive = naive_wl(g, 2);
        OrderedPartition engine = aut_run(RelationKind::WL, g, 2).partition;
        CHECK(naive == to_unordered(engine));
    }
}

TEST_CASE("naive_wl on the edgeless graph groups by equality pattern only") {
    UnorderedPartition p = naive_wl(empty_graph(3), 2);
    CHECK(p.size() == 2);  // diagonal and off-diagonal
}

TEST_CASE("naive_wl relabels along with the graph") {
    std::mt19937_64 rng(43);
    Graph g = example_graph();
    std::vector<int> perm{2, 0, 3, 1};
    Graph pg = apply_permutation(g, perm);
    UnorderedPartition a = naive_wl(g, 2);
    UnorderedPartition b = naive_wl(pg, 2);
    // Map a through the permutation and compare.
    UnorderedPartition mapped;
    for (const auto& cell : a) {
        std::vector<std::int32_t> mc;
        for (std::int32_t code : cell) {
            Tuple t = tuple_decode(code, 4, 2);
            for (int& e : t) e = perm[e];
            mc.push_back(static_cast<std::int32_t>(tuple_code(t, 4)));
        }
        std::sort(mc.begin(), mc.end());
        mapped.push_back(std::move(mc));
    }
    std::sort(mapped.begin(), mapped.end());
    CHECK(mapped == b);
}

TEST_CASE("orbit partition refines every algorithmic fixed point") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 10; ++trial) {
        int n = 2 + static_cast<int>(rng() % 3);
        std::vector<std::pair<int, int>> es;
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v)
                if (rng() & 1) es.emplace_back(u, v);
        Graph g = make_graph(n, es);
        for (int k = 1; k <= 2; ++k) {
            OrderedPartition orbits = OrderedPartition::from_cells(n, k, orbit_partition(g, k));
            OrderedPartition wl = aut_run(RelationKind::WL, g, k).partition;
            OrderedPartition ds = aut_run(RelationKind::DeltaSmall, g, k).partition;
            OrderedPartition db = aut_run(RelationKind::DeltaBig, g, k).partition;
            CHECK(refines(orbits, wl));
            CHECK(refines(orbits, ds));
            CHECK(refines(ds, db));
            if (k >= 2) CHECK(refines(wl, ds));  // wl carries no adjacency at k=1
        }
    }
}
