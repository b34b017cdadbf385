#include <doctest.h>

#include "hmotif/parallel.hpp"
#include "hmotif/projection.hpp"
#include "test_util.hpp"

using namespace hmotif;
using testutil::make_hypergraph;

TEST_CASE("project: path of three hyperedges") {
    Hypergraph g = make_hypergraph({{1, 2}, {2, 3}, {3, 4}});
    ProjectedGraph p = project(g);
    CHECK(p.wedge_count() == 2);
    CHECK(p.overlap(0, 1) == 1);
    CHECK(p.overlap(1, 2) == 1);
    CHECK(p.overlap(0, 2) == 0);

    // neighborhood of the middle edge, sorted
    const auto& nbrs = p.neighbors(1);
    REQUIRE(nbrs.size() == 2);
    CHECK(nbrs[0].id == 0);
    CHECK(nbrs[1].id == 2);
}

TEST_CASE("project: disjoint hyperedges have no wedges") {
    Hypergraph g = make_hypergraph({{1, 2}, {3, 4}});
    ProjectedGraph p = project(g);
    CHECK(p.wedge_count() == 0);
    CHECK(p.neighbors(0).empty());
}

TEST_CASE("project: overlap weights count shared members") {
    Hypergraph g = make_hypergraph({{1, 2, 3}, {2, 3}});
    ProjectedGraph p = project(g);
    CHECK(p.overlap(0, 1) == 2);
    CHECK(p.neighbors(0).size() == 1);
    CHECK(p.neighbors(0)[0].overlap == 2);
}

TEST_CASE("project matches pairwise-intersection oracle on random hypergraphs") {
    for (std::uint64_t seed = 1; seed <= 26; ++seed) {
        // the last round runs at the 200-hyperedge scale
        Hypergraph g = seed <= 25 ? testutil::random_hypergraph(seed, 40, 25)
                                  : testutil::random_hypergraph(404, 200, 120);
        ProjectedGraph p = project(g);

        std::size_t wedges = 0;
        for (EdgeId a = 0; a < g.num_edges(); ++a) {
            for (EdgeId b = a + 1; b < g.num_edges(); ++b) {
                std::uint32_t w = g.overlap_size(a, b);
                CHECK(p.overlap(a, b) == w);
                CHECK(p.overlap(b, a) == w);
                if (w > 0) ++wedges;
            }
        }
        CHECK(p.wedge_count() == wedges);
    }
}

TEST_CASE("Σω over wedges equals Σ_v C(|E_v|,2)") {
    for (std::uint64_t seed = 100; seed < 110; ++seed) {
        Hypergraph g = testutil::random_hypergraph(seed, 30, 15);
        ProjectedGraph p = project(g);
        std::uint64_t lhs = 0;
        for (auto [i, j] : p.wedges()) lhs += p.overlap(i, j);
        std::uint64_t rhs = 0;
        for (NodeId v = 0; v < g.num_nodes(); ++v) {
            std::uint64_t d = g.incident_edges(v).size();
            rhs += d * (d - 1) / 2;
        }
        CHECK(lhs == rhs);
    }
}

TEST_CASE("wedge count below the directed degree sum") {
    Hypergraph g = testutil::random_hypergraph(7, 30, 12);
    ProjectedGraph p = project(g);
    std::size_t degree_sum = 0;
    for (EdgeId i = 0; i < g.num_edges(); ++i) degree_sum += p.degree(i);
    if (p.wedge_count() > 0) CHECK(p.wedge_count() < degree_sum);
    CHECK(2 * p.wedge_count() == degree_sum);
}

TEST_CASE("projection is identical for any worker count") {
    Hypergraph g = testutil::random_hypergraph(42, 60, 30);
    ProjectedGraph p1 = project(g, 1);
    for (unsigned workers : {2u, 4u, 8u}) {
        ProjectedGraph pw = project(g, workers);
        REQUIRE(pw.wedge_count() == p1.wedge_count());
        CHECK(pw.wedges() == p1.wedges());
        for (EdgeId i = 0; i < g.num_edges(); ++i) CHECK(pw.neighbors(i) == p1.neighbors(i));
    }
}

TEST_CASE("compute_neighborhood equals the projected row") {
    Hypergraph g = testutil::random_hypergraph(9, 40, 20);
    ProjectedGraph p = project(g);
    for (EdgeId i = 0; i < g.num_edges(); ++i)
        CHECK(compute_neighborhood(g, i) == p.neighbors(i));
    CHECK_THROWS(compute_neighborhood(g, static_cast<EdgeId>(g.num_edges())));
}

TEST_CASE("worker exceptions funnel through parallel_blocks") {
    bool caught = false;
    try {
        parallel_blocks(100, 4, [](unsigned w, std::size_t, std::size_t) {
            if (w == 2) throw std::runtime_error("worker failure");
        });
    } catch (const std::runtime_error& e) {
        caught = std::string(e.what()) == "worker failure";
    }
    CHECK(caught);
}
