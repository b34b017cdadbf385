#include <doctest.h>

#include "hmotif/exact.hpp"
#include "hmotif/memoized.hpp"
#include "test_util.hpp"

using namespace hmotif;
using testutil::make_hypergraph;

namespace {

// skewed instance: one hub hyperedge overlapping everything, many small ones
Hypergraph skewed_fixture() {
    std::vector<std::vector<int>> lists;
    std::vector<int> hub;
    for (int v = 0; v < 24; ++v) hub.push_back(v);
    lists.push_back(hub);
    for (int v = 0; v < 24; v += 2) lists.push_back({v, v + 1, 100 + v});
    for (int v = 0; v < 12; ++v) lists.push_back({100 + 2 * v, 200 + v});
    return testutil::make_hypergraph(lists);
}

std::size_t total_adjacency(const ProjectedGraph& p) {
    std::size_t total = 0;
    for (EdgeId i = 0; i < p.num_edges(); ++i) total += p.degree(i);
    return total;
}

} // namespace

TEST_CASE("wedge index matches the full projection") {
    for (std::uint64_t seed : {1u, 12u, 31u}) {
        Hypergraph g = testutil::random_hypergraph(seed, 40, 20);
        ProjectedGraph p = project(g);
        WedgeIndex idx = build_wedge_index(g);
        CHECK(idx.wedges == p.wedges());
        for (EdgeId i = 0; i < g.num_edges(); ++i) CHECK(idx.degrees[i] == p.degree(i));
    }
}

TEST_CASE("provider serves exact neighborhoods at any budget and policy") {
    Hypergraph g = testutil::random_hypergraph(8, 30, 15);
    ProjectedGraph p = project(g);
    WedgeIndex idx = build_wedge_index(g);
    for (PinPolicy policy :
         {PinPolicy::degree_priority, PinPolicy::random, PinPolicy::lru}) {
        for (std::size_t budget : {std::size_t(0), std::size_t(10), total_adjacency(p)}) {
            NeighborhoodProvider np(g, {.budget_entries = budget, .policy = policy, .seed = 5},
                                    &idx.degrees);
            for (EdgeId i = 0; i < g.num_edges(); ++i) {
                auto nbrs = np.get(i);
                CHECK(*nbrs == p.neighbors(i));
            }
        }
    }
}

TEST_CASE("budget 0 recomputes every call") {
    Hypergraph g = skewed_fixture();
    NeighborhoodProvider np(g, {.budget_entries = 0, .policy = PinPolicy::degree_priority});
    (void)np.get(0);
    (void)np.get(0);
    (void)np.get(0);
    CHECK(np.stats().constructions == 3);
    CHECK(np.stats().hits == 0);
    CHECK(np.stats().cached_entries == 0);
}

TEST_CASE("full budget stops recomputation after warm-up") {
    Hypergraph g = skewed_fixture();
    ProjectedGraph p = project(g);
    WedgeIndex idx = build_wedge_index(g);
    NeighborhoodProvider np(
        g, {.budget_entries = total_adjacency(p), .policy = PinPolicy::degree_priority},
        &idx.degrees);
    for (int pass = 0; pass < 3; ++pass)
        for (EdgeId i = 0; i < g.num_edges(); ++i) (void)np.get(i);
    CHECK(np.stats().constructions == g.num_edges());
    CHECK(np.stats().hits == 2 * g.num_edges());
    CHECK(np.stats().cached_entries == total_adjacency(p));
}

TEST_CASE("degree priority pins the hub first") {
    Hypergraph g = skewed_fixture();
    ProjectedGraph p = project(g);
    WedgeIndex idx = build_wedge_index(g);
    // hyperedge 0 is the hub; budget covers exactly its neighborhood
    NeighborhoodProvider np(
        g, {.budget_entries = p.degree(0), .policy = PinPolicy::degree_priority},
        &idx.degrees);
    CHECK(np.pinned(0));
    (void)np.get(0);
    (void)np.get(0);
    CHECK(np.stats().hits == 1);
}

TEST_CASE("lru evicts under pressure but stays within budget") {
    Hypergraph g = skewed_fixture();
    ProjectedGraph p = project(g);
    std::size_t budget = p.degree(0) + 2;
    NeighborhoodProvider np(g, {.budget_entries = budget, .policy = PinPolicy::lru});
    for (int pass = 0; pass < 2; ++pass)
        for (EdgeId i = 0; i < g.num_edges(); ++i) {
            (void)np.get(i);
            CHECK(np.stats().cached_entries <= budget);
        }
    CHECK(np.stats().constructions > g.num_edges()); // some rebuilds happened
}

TEST_CASE("cached sampling is bitwise-identical to the full-projection path") {
    Hypergraph g = skewed_fixture();
    ProjectedGraph p = project(g);
    WedgeIndex idx = build_wedge_index(g);
    REQUIRE(idx.wedges == p.wedges());

    SamplerConfig cfg{.sample_count = 300, .seed = 424242, .workers = 1};
    EstimateVector full = count_approx_wedge(g, p, cfg);

    std::size_t one_percent = std::max<std::size_t>(1, total_adjacency(p) / 100);
    for (PinPolicy policy :
         {PinPolicy::degree_priority, PinPolicy::random, PinPolicy::lru}) {
        for (std::size_t budget :
             {std::size_t(0), one_percent, total_adjacency(p)}) {
            NeighborhoodProvider np(g, {.budget_entries = budget, .policy = policy, .seed = 17},
                                    &idx.degrees);
            EstimateVector cached = wedge_sampling_with_cache(g, np, idx, cfg);
            CHECK(cached.estimates == full.estimates);
        }
    }
}

TEST_CASE("construction count shrinks as the budget grows") {
    Hypergraph g = skewed_fixture();
    WedgeIndex idx = build_wedge_index(g);
    std::size_t total = 0;
    for (auto d : idx.degrees) total += d;

    SamplerConfig cfg{.sample_count = 400, .seed = 5, .workers = 1};
    std::uint64_t prev = UINT64_MAX;
    for (std::size_t budget : {std::size_t(0), total / 100, total / 10, total}) {
        NeighborhoodProvider np(
            g, {.budget_entries = budget, .policy = PinPolicy::degree_priority}, &idx.degrees);
        (void)wedge_sampling_with_cache(g, np, idx, cfg);
        std::uint64_t built = np.stats().constructions;
        CHECK(built <= prev);
        prev = built;
    }
}

TEST_CASE("degree priority beats random pinning on the skewed instance") {
    Hypergraph g = skewed_fixture();
    WedgeIndex idx = build_wedge_index(g);
    std::size_t total = 0;
    for (auto d : idx.degrees) total += d;
    std::size_t budget = total / 10;

    std::uint64_t degree_built_total = 0, random_built_total = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        SamplerConfig cfg{.sample_count = 300, .seed = seed, .workers = 1};
        NeighborhoodProvider deg(
            g, {.budget_entries = budget, .policy = PinPolicy::degree_priority}, &idx.degrees);
        (void)wedge_sampling_with_cache(g, deg, idx, cfg);
        degree_built_total += deg.stats().constructions;

        NeighborhoodProvider rnd(
            g, {.budget_entries = budget, .policy = PinPolicy::random, .seed = seed},
            &idx.degrees);
        (void)wedge_sampling_with_cache(g, rnd, idx, cfg);
        random_built_total += rnd.stats().constructions;
    }
    CHECK(degree_built_total <= random_built_total);
}
