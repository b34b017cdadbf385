#include <doctest.h>

#include <map>
#include <set>

#include "hmotif/motif_table.hpp"
#include "hmotif/projection.hpp"
#include "test_util.hpp"

using namespace hmotif;
using testutil::make_hypergraph;

TEST_CASE("table has 26 motif classes, 6 open") {
    const MotifTable& table = MotifTable::instance();
    std::set<int> ids;
    int valid_patterns = 0;
    for (int p = 0; p < kNumPatterns; ++p) {
        const auto& e = table.entry(static_cast<std::uint8_t>(p));
        if (e.cls == PatternClass::valid) {
            ++valid_patterns;
            ids.insert(e.motif_id);
        }
    }
    CHECK(valid_patterns == 86);
    REQUIRE(ids.size() == 26);
    CHECK(*ids.begin() == 1);
    CHECK(*ids.rbegin() == 26);
    int open = 0;
    for (int id = 1; id <= 26; ++id) open += MotifTable::is_open(id) ? 1 : 0;
    CHECK(open == 6);
    for (int id = 17; id <= 22; ++id) CHECK(MotifTable::is_open(id));
}

TEST_CASE("all-empty pattern is invalid with empty-hyperedge reason") {
    const auto& e = MotifTable::instance().entry(0);
    CHECK(e.cls == PatternClass::empty_hyperedge);
}

TEST_CASE("reference example patterns") {
    const MotifTable& table = MotifTable::instance();
    // regions (1,0,1,1,1,0,0): valid and open, e_k ∩ e_i empty
    std::uint8_t p = 0b0011101;
    CHECK(table.entry(p).cls == PatternClass::valid);
    CHECK(MotifTable::is_open(table.entry(p).motif_id));

    // duplicated hyperedges: {1} vs {1} leaves only region 6 or region 3
    RegionCardinalities dup;
    dup.r = {0, 0, 1, 1, 0, 0, 0}; // e_i == e_j = the pairwise-only region
    CHECK(table.entry(dup.pattern()).cls == PatternClass::duplicate_hyperedges);

    // only one non-empty pairwise intersection: disconnected
    RegionCardinalities disc;
    disc.r = {1, 1, 1, 1, 0, 0, 0};
    CHECK(table.entry(disc.pattern()).cls == PatternClass::disconnected);
}

TEST_CASE("orbit members agree on id and canonical pattern") {
    const MotifTable& table = MotifTable::instance();
    constexpr std::array<std::array<int, 3>, 6> perms = {
        {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    for (int p = 0; p < kNumPatterns; ++p) {
        const auto& e = table.entry(static_cast<std::uint8_t>(p));
        for (const auto& perm : perms) {
            std::uint8_t q = permute_pattern(static_cast<std::uint8_t>(p), perm);
            const auto& eq = table.entry(q);
            CHECK(eq.cls == e.cls);
            if (e.cls == PatternClass::valid) {
                CHECK(eq.motif_id == e.motif_id);
                CHECK(eq.canonical == e.canonical);
            }
        }
    }
    // canonical pattern of each motif maps back to the motif
    for (int id = 1; id <= 26; ++id) {
        CHECK(table.motif_id(table.canonical_pattern(id)) == id);
        CHECK(!table.orbit(id).empty());
    }
}

TEST_CASE("region cardinalities by inclusion-exclusion match direct set arithmetic") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        Hypergraph g = testutil::random_hypergraph(seed, 25, 12);
        ProjectedGraph p = project(g);
        std::size_t checked = 0;
        for (EdgeId i = 0; i < g.num_edges() && checked < 600; ++i) {
            for (EdgeId j = i + 1; j < g.num_edges(); ++j) {
                for (EdgeId k = j + 1; k < g.num_edges(); ++k) {
                    RegionCardinalities rc = region_cardinalities(g, p, i, j, k);
                    auto direct = testutil::regions_direct(
                        {g.edge(i).begin(), g.edge(i).end()},
                        {g.edge(j).begin(), g.edge(j).end()},
                        {g.edge(k).begin(), g.edge(k).end()});
                    CHECK(rc.r == direct);
                    ++checked;
                }
            }
        }
    }
}

TEST_CASE("classify_triple on reference triples") {
    // one closed triple sharing a chain of overlaps and the common node 3
    Hypergraph g = make_hypergraph({{1, 2, 3}, {2, 3, 4}, {3, 4, 5}});
    ProjectedGraph p = project(g);
    int id = classify_triple(g, p, 0, 1, 2);
    CHECK(!MotifTable::is_open(id));
    CHECK(id == 15);

    // a hyperedge with its two disjoint subsets: open
    Hypergraph h = make_hypergraph({{1, 2, 3}, {1, 2}, {3}});
    ProjectedGraph ph = project(h);
    int open_id = classify_triple(h, ph, 0, 1, 2);
    CHECK(MotifTable::is_open(open_id));
    CHECK(open_id == 17);

    // duplicate members: classification error
    CHECK_THROWS(classify_triple(g, p, 0, 0, 1));
    // disconnected triple
    Hypergraph d = make_hypergraph({{1, 2}, {2, 3}, {9, 10}});
    ProjectedGraph pd = project(d);
    CHECK_THROWS(classify_triple(d, pd, 0, 1, 2));
}

TEST_CASE("classification is permutation invariant") {
    Hypergraph g = testutil::random_hypergraph(77, 20, 10);
    ProjectedGraph p = project(g);
    const MotifTable& table = MotifTable::instance();
    for (EdgeId i = 0; i < g.num_edges(); ++i) {
        for (EdgeId j = i + 1; j < g.num_edges(); ++j) {
            for (EdgeId k = j + 1; k < g.num_edges(); ++k) {
                std::uint8_t pat = region_cardinalities(g, p, i, j, k).pattern();
                if (table.entry(pat).cls != PatternClass::valid) continue;
                int id = classify_triple(g, p, i, j, k);
                CHECK(classify_triple(g, p, j, k, i) == id);
                CHECK(classify_triple(g, p, k, i, j) == id);
                CHECK(classify_triple(g, p, j, i, k) == id);
                CHECK(classify_triple(g, p, i, k, j) == id);
                CHECK(classify_triple(g, p, k, j, i) == id);
            }
        }
    }
}

TEST_CASE("motif id is independent of region sizes") {
    // inflate non-empty regions by duplicating members; the id must not move
    Hypergraph small = make_hypergraph({{1, 2, 3}, {2, 3, 4}, {3, 4, 5}});
    Hypergraph big = make_hypergraph(
        {{1, 10, 11, 2, 3}, {2, 3, 4, 40, 41, 42}, {3, 4, 40, 41, 42, 5, 50}});
    ProjectedGraph ps = project(small);
    ProjectedGraph pb = project(big);
    CHECK(classify_triple(small, ps, 0, 1, 2) == classify_triple(big, pb, 0, 1, 2));
}

TEST_CASE("classification works without a projection") {
    // overlaps fall back to direct set intersection when no projection is given
    Hypergraph g = make_hypergraph({{1, 2, 3}, {2, 3, 4}, {3, 4, 5}});
    ProjectedGraph p = project(g);
    ProjectedGraph empty;
    CHECK(classify_triple(g, empty, 0, 1, 2) == classify_triple(g, p, 0, 1, 2));
    CHECK(region_cardinalities(g, empty, 0, 1, 2).r == region_cardinalities(g, p, 0, 1, 2).r);
    CHECK_THROWS(classify_triple(g, empty, 0, 1, 5));
}

TEST_CASE("subset-family open motifs") {
    // with and without private nodes in the containing hyperedge:
    // two different open motifs
    Hypergraph a = make_hypergraph({{1, 2, 3}, {1, 2}, {3}});
    Hypergraph b = make_hypergraph({{1, 2, 3, 4}, {1, 2}, {3}});
    ProjectedGraph pa = project(a);
    ProjectedGraph pb = project(b);
    int ia = classify_triple(a, pa, 0, 1, 2);
    int ib = classify_triple(b, pb, 0, 1, 2);
    CHECK(MotifTable::is_open(ia));
    CHECK(MotifTable::is_open(ib));
    CHECK(ia != ib);
}
