#include <doctest.h>

#include <map>
#include <tuple>

#include "hmotif/exact.hpp"
#include "test_util.hpp"

using namespace hmotif;
using testutil::make_hypergraph;

TEST_CASE("count_exact: single closed triple") {
    Hypergraph g = make_hypergraph({{1, 2, 3}, {2, 3, 4}, {3, 4, 5}});
    ProjectedGraph p = project(g);
    CountVector m = count_exact(g, p);
    CHECK(m.total() == 1);
    CHECK(m[15] == 1);
}

TEST_CASE("count_exact: disjoint hyperedges count nothing") {
    Hypergraph g = make_hypergraph({{1, 2}, {3, 4}});
    ProjectedGraph p = project(g);
    CHECK(count_exact(g, p).total() == 0);
}

TEST_CASE("count_exact equals the all-triples oracle") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        Hypergraph g = testutil::random_hypergraph(seed, 60, 40);
        ProjectedGraph p = project(g);
        CountVector fast = count_exact(g, p);
        CountVector slow = testutil::brute_force_counts(g);
        CHECK(fast == slow);
    }
}

TEST_CASE("count_exact is order independent up to renumbering") {
    std::vector<std::vector<int>> lists = {{1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {1, 5}, {2, 6, 7}};
    Hypergraph a = make_hypergraph(lists);
    std::rotate(lists.begin(), lists.begin() + 2, lists.end());
    Hypergraph b = make_hypergraph(lists);
    ProjectedGraph pa = project(a);
    ProjectedGraph pb = project(b);
    CHECK(count_exact(a, pa) == count_exact(b, pb));
}

TEST_CASE("count_exact identical for any worker count") {
    Hypergraph g = testutil::random_hypergraph(11, 60, 30);
    ProjectedGraph p = project(g);
    CountVector ref = count_exact(g, p, 1);
    for (unsigned workers : {2u, 4u, 8u}) CHECK(count_exact(g, p, workers) == ref);
}

TEST_CASE("enumerate_instances matches count_exact and emits each instance once") {
    Hypergraph g = testutil::random_hypergraph(30, 30, 20);
    ProjectedGraph p = project(g);
    CountVector m = count_exact(g, p);

    std::map<std::tuple<EdgeId, EdgeId, EdgeId>, int> seen;
    CountVector from_stream;
    std::uint64_t emitted = enumerate_instances(g, p, [&](EdgeId i, EdgeId j, EdgeId k, int t) {
        EdgeId e[3] = {i, j, k};
        std::sort(e, e + 3);
        auto key = std::make_tuple(e[0], e[1], e[2]);
        CHECK(seen.count(key) == 0);
        seen[key] = t;
        ++from_stream[t];
        return true;
    });
    CHECK(emitted == m.total());
    CHECK(from_stream == m);

    // open instances span 2 hyperwedges, closed 3
    for (const auto& [key, t] : seen) {
        auto [a, b, c] = key;
        int adjacent = (p.adjacent(a, b) ? 1 : 0) + (p.adjacent(b, c) ? 1 : 0) +
                       (p.adjacent(a, c) ? 1 : 0);
        CHECK(adjacent == MotifTable::wedges_per_instance(t));
    }
}

TEST_CASE("enumerate_instances aborts when the sink declines") {
    Hypergraph g = testutil::random_hypergraph(5, 30, 12);
    ProjectedGraph p = project(g);
    std::uint64_t total = enumerate_instances(g, p, [](EdgeId, EdgeId, EdgeId, int) { return true; });
    if (total < 3) return; // degenerate draw, nothing to abort
    std::uint64_t stop_after = total / 2;
    std::uint64_t seen = 0;
    std::uint64_t emitted = enumerate_instances(g, p, [&](EdgeId, EdgeId, EdgeId, int) {
        return ++seen < stop_after;
    });
    CHECK(emitted == stop_after - 1);
}

TEST_CASE("per-hyperedge features: single instance graph") {
    Hypergraph g = make_hypergraph({{1, 2, 3}, {2, 3, 4}, {3, 4, 5}});
    ProjectedGraph p = project(g);
    auto features = per_hyperedge_features(g, p);
    for (EdgeId i = 0; i < 3; ++i) {
        std::uint64_t row_total = 0;
        for (auto c : features[i]) row_total += c;
        CHECK(row_total == 1);
    }
}

TEST_CASE("per-hyperedge features: isolated hyperedge has a zero vector") {
    Hypergraph g = make_hypergraph({{1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {99, 100}});
    ProjectedGraph p = project(g);
    auto features = per_hyperedge_features(g, p);
    for (auto c : features[3]) CHECK(c == 0);
}

TEST_CASE("feature column sums equal 3·M[t]") {
    for (std::uint64_t seed : {3u, 8u, 21u}) {
        Hypergraph g = testutil::random_hypergraph(seed, 40, 25);
        ProjectedGraph p = project(g);
        CountVector m = count_exact(g, p);
        auto features = per_hyperedge_features(g, p, 2);
        for (int t = 1; t <= 26; ++t) {
            std::uint64_t col = 0;
            for (EdgeId i = 0; i < g.num_edges(); ++i) col += features[i][t - 1];
            CHECK(col == 3 * m[t]);
        }
    }
}

TEST_CASE("overlap_stats identities") {
    for (std::uint64_t seed = 50; seed < 60; ++seed) {
        Hypergraph g = testutil::random_hypergraph(seed, 20, 12);
        ProjectedGraph p = project(g);
        CountVector m = count_exact(g, p);
        OverlapStats s = overlap_stats(g, p);
        for (int t = 0; t < 26; ++t) {
            std::uint64_t pairs = m.counts[t] * (m.counts[t] - 1) / 2;
            CHECK(s.p[t][0] + s.p[t][1] + s.p[t][2] == pairs);
            CHECK(s.q[t][0] + s.q[t][1] == pairs);
            CHECK(s.q[t][1] <= s.p[t][2]);
        }
    }
}

TEST_CASE("overlap_stats: hand-built pair sharing one hyperedge") {
    // two closed triples sharing exactly the hyperedge {1,2,3}; no shared wedge pair
    Hypergraph g = make_hypergraph({{1, 2, 3}, {2, 3, 4}, {3, 4, 1}, {11, 12, 1}, {12, 13, 1}});
    ProjectedGraph p = project(g);
    CountVector m = count_exact(g, p);
    OverlapStats s = overlap_stats(g, p);
    std::uint64_t p1_total = 0, q0_total = 0;
    for (int t = 0; t < 26; ++t) {
        p1_total += s.p[t][1];
        q0_total += s.q[t][0];
    }
    CHECK(m.total() >= 2);
    // at least one same-motif pair shares exactly one hyperedge and no wedge
    if (p1_total > 0) CHECK(q0_total > 0);
}

TEST_CASE("overlap_stats refuses above the instance cap") {
    Hypergraph g = testutil::random_hypergraph(4, 30, 10);
    ProjectedGraph p = project(g);
    CountVector m = count_exact(g, p);
    if (m.total() > 1) CHECK_THROWS(overlap_stats(g, p, 1));
}

TEST_CASE("single instance has all-zero pair stats") {
    Hypergraph g = make_hypergraph({{1, 2, 3}, {2, 3, 4}, {3, 4, 5}});
    ProjectedGraph p = project(g);
    OverlapStats s = overlap_stats(g, p);
    for (int t = 0; t < 26; ++t) {
        CHECK(s.p[t][0] + s.p[t][1] + s.p[t][2] == 0);
        CHECK(s.q[t][0] + s.q[t][1] == 0);
    }
}
