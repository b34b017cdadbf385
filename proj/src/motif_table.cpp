#include "hmotif/motif_table.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace hmotif {

namespace {

// which of (e_i, e_j, e_k) contain each region, region order as in
// RegionCardinalities
constexpr int kRegionMembership[7][3] = {
    {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 1},
};

int region_with_membership(int a, int b, int c) {
    for (int r = 0; r < 7; ++r)
        if (kRegionMembership[r][0] == a && kRegionMembership[r][1] == b &&
            kRegionMembership[r][2] == c)
            return r;
    assert(false);
    return -1;
}

bool bit(std::uint8_t p, int r) { return (p >> r) & 1u; }

// hyperedge composition in region bits: e_i = regions {0,3,5,6}, etc.
constexpr std::uint8_t kEdgeMask[3] = {
    std::uint8_t(1u << 0 | 1u << 3 | 1u << 5 | 1u << 6),
    std::uint8_t(1u << 1 | 1u << 3 | 1u << 4 | 1u << 6),
    std::uint8_t(1u << 2 | 1u << 4 | 1u << 5 | 1u << 6),
};

// set-difference masks: regions composing e_x \ e_y, indexed [x][y]
constexpr std::uint8_t kDiffMask[3][3] = {
    {0, std::uint8_t(1u << 0 | 1u << 5), std::uint8_t(1u << 0 | 1u << 3)},
    {std::uint8_t(1u << 1 | 1u << 4), 0, std::uint8_t(1u << 1 | 1u << 3)},
    {std::uint8_t(1u << 2 | 1u << 4), std::uint8_t(1u << 2 | 1u << 5), 0},
};

// pairwise intersection masks: e_i∩e_j, e_j∩e_k, e_k∩e_i
constexpr std::uint8_t kPairMask[3] = {
    std::uint8_t(1u << 3 | 1u << 6),
    std::uint8_t(1u << 4 | 1u << 6),
    std::uint8_t(1u << 5 | 1u << 6),
};

PatternClass classify_pattern(std::uint8_t p) {
    for (int x = 0; x < 3; ++x)
        if ((p & kEdgeMask[x]) == 0) return PatternClass::empty_hyperedge;
    for (int x = 0; x < 3; ++x)
        for (int y = x + 1; y < 3; ++y)
            if ((p & kDiffMask[x][y]) == 0 && (p & kDiffMask[y][x]) == 0)
                return PatternClass::duplicate_hyperedges;
    int adjacent = 0;
    for (int q = 0; q < 3; ++q)
        if (p & kPairMask[q]) ++adjacent;
    if (adjacent < 2) return PatternClass::disconnected;
    return PatternClass::valid;
}

bool pattern_is_open(std::uint8_t p) {
    int adjacent = 0;
    for (int q = 0; q < 3; ++q)
        if (p & kPairMask[q]) ++adjacent;
    return adjacent == 2;
}

constexpr std::array<std::array<int, 3>, 6> kPerms = {{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
}};

} // namespace

std::uint8_t permute_pattern(std::uint8_t pattern, const std::array<int, 3>& perm) {
    std::uint8_t out = 0;
    for (int r = 0; r < 7; ++r) {
        if (!bit(pattern, r)) continue;
        // region r of the original triple, re-expressed in the relabeled one:
        // the element is in relabeled hyperedge x iff it is in original perm[x]
        const auto& m = kRegionMembership[r];
        int nr = region_with_membership(m[perm[0]], m[perm[1]], m[perm[2]]);
        out |= std::uint8_t(1u << nr);
    }
    return out;
}

const char* pattern_class_name(PatternClass c) {
    switch (c) {
        case PatternClass::valid: return "valid";
        case PatternClass::empty_hyperedge: return "empty-hyperedge";
        case PatternClass::duplicate_hyperedges: return "duplicate-hyperedges";
        case PatternClass::disconnected: return "disconnected";
    }
    return "?";
}

MotifTable::MotifTable() {
    for (int p = 0; p < kNumPatterns; ++p)
        entries_[p].cls = classify_pattern(static_cast<std::uint8_t>(p));

    struct Orbit {
        std::uint8_t canonical;
        bool open;
        std::vector<std::uint8_t> members;
    };
    std::vector<Orbit> orbits;
    std::array<bool, kNumPatterns> grouped{};
    for (int p = 0; p < kNumPatterns; ++p) {
        if (entries_[p].cls != PatternClass::valid || grouped[p]) continue;
        Orbit orb;
        orb.canonical = 0xff;
        for (const auto& perm : kPerms) {
            std::uint8_t q = permute_pattern(static_cast<std::uint8_t>(p), perm);
            assert(entries_[q].cls == PatternClass::valid);
            if (!grouped[q]) {
                grouped[q] = true;
                orb.members.push_back(q);
            }
            orb.canonical = std::min(orb.canonical, q);
        }
        std::sort(orb.members.begin(), orb.members.end());
        orb.open = pattern_is_open(orb.members.front());
        orbits.push_back(std::move(orb));
    }

    std::sort(orbits.begin(), orbits.end(),
              [](const Orbit& a, const Orbit& b) { return a.canonical < b.canonical; });

    int n_open = 0;
    for (const auto& o : orbits) n_open += o.open ? 1 : 0;
    if (orbits.size() != kNumMotifs || n_open != 6)
        throw std::logic_error("motif table self-check failed: expected 26 orbits, 6 open");

    int next_closed = 1, next_open = 17;
    for (const auto& o : orbits) {
        int id;
        if (o.open) {
            id = next_open++;
        } else {
            id = next_closed++;
            if (next_closed == 17) next_closed = 23; // 17..22 are reserved for open motifs
        }
        canonical_[id] = o.canonical;
        orbits_[id] = o.members;
        for (std::uint8_t q : o.members) {
            entries_[q].motif_id = static_cast<std::uint8_t>(id);
            entries_[q].canonical = o.canonical;
        }
    }
}

const MotifTable& MotifTable::instance() {
    static const MotifTable table;
    return table;
}

RegionCardinalities regions_from_overlaps(std::uint64_t size_i, std::uint64_t size_j,
                                          std::uint64_t size_k, std::uint64_t w_ij,
                                          std::uint64_t w_jk, std::uint64_t w_ki,
                                          std::uint64_t w_ijk) {
    RegionCardinalities rc;
    rc.r[0] = size_i - w_ij - w_ki + w_ijk;
    rc.r[1] = size_j - w_ij - w_jk + w_ijk;
    rc.r[2] = size_k - w_ki - w_jk + w_ijk;
    rc.r[3] = w_ij - w_ijk;
    rc.r[4] = w_jk - w_ijk;
    rc.r[5] = w_ki - w_ijk;
    rc.r[6] = w_ijk;
    return rc;
}

RegionCardinalities region_cardinalities(const Hypergraph& g, const ProjectedGraph& p,
                                         EdgeId i, EdgeId j, EdgeId k) {
    if (i == j || j == k || i == k)
        throw std::invalid_argument("triple must consist of three distinct hyperedges");
    if (i >= g.num_edges() || j >= g.num_edges() || k >= g.num_edges())
        throw std::out_of_range("hyperedge id out of range");
    bool have_projection = p.num_edges() == g.num_edges();
    std::uint64_t w_ij = have_projection ? p.overlap(i, j) : g.overlap_size(i, j);
    std::uint64_t w_jk = have_projection ? p.overlap(j, k) : g.overlap_size(j, k);
    std::uint64_t w_ki = have_projection ? p.overlap(k, i) : g.overlap_size(k, i);
    std::uint64_t w_ijk = g.triple_overlap(i, j, k);
    return regions_from_overlaps(g.edge_size(i), g.edge_size(j), g.edge_size(k),
                                 w_ij, w_jk, w_ki, w_ijk);
}

int classify_triple(const Hypergraph& g, const ProjectedGraph& p,
                    EdgeId i, EdgeId j, EdgeId k) {
    RegionCardinalities rc = region_cardinalities(g, p, i, j, k);
    const auto& entry = MotifTable::instance().entry(rc.pattern());
    if (entry.cls != PatternClass::valid)
        throw std::invalid_argument(std::string("triple is not a motif instance: ") +
                                    pattern_class_name(entry.cls));
    return entry.motif_id;
}

} // namespace hmotif
