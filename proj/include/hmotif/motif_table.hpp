#ifndef HMOTIF_MOTIF_TABLE_HPP
#define HMOTIF_MOTIF_TABLE_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hmotif/hypergraph.hpp"
#include "hmotif/projection.hpp"

namespace hmotif {

inline constexpr int kNumMotifs = 26;
inline constexpr int kNumPatterns = 128;

// Seven pairwise-disjoint regions of the Venn diagram of three hyperedges,
// in this fixed order:
//   0: e_i \ e_j \ e_k      3: e_i ∩ e_j \ e_k      6: e_i ∩ e_j ∩ e_k
//   1: e_j \ e_k \ e_i      4: e_j ∩ e_k \ e_i
//   2: e_k \ e_i \ e_j      5: e_k ∩ e_i \ e_j
struct RegionCardinalities {
    std::array<std::uint64_t, 7> r{};

    // bit b set iff region b is non-empty
    std::uint8_t pattern() const {
        std::uint8_t p = 0;
        for (int b = 0; b < 7; ++b)
            if (r[b] > 0) p |= std::uint8_t(1u << b);
        return p;
    }
};

// Region cardinalities from edge sizes, pairwise overlaps and the triple
// overlap, by inclusion-exclusion. All results are exact and non-negative
// for any real triple of sets.
RegionCardinalities regions_from_overlaps(std::uint64_t size_i, std::uint64_t size_j,
                                          std::uint64_t size_k, std::uint64_t w_ij,
                                          std::uint64_t w_jk, std::uint64_t w_ki,
                                          std::uint64_t w_ijk);

enum class PatternClass : std::uint8_t {
    valid,
    empty_hyperedge,
    duplicate_hyperedges,
    disconnected,
};

const char* pattern_class_name(PatternClass c);

// Canonical map from 7-bit emptiness patterns to the 26 motif classes.
//
// All 128 patterns are enumerated. A pattern is invalid if a hyperedge is
// empty, two hyperedges are set-equal, or fewer than two of the pairwise
// intersections are non-empty. Valid patterns are grouped into orbits under
// the 6 relabelings of the three hyperedges; every orbit member maps to the
// same motif id. Open orbits (exactly two non-empty pairwise intersections)
// take ids 17..22, closed orbits take 1..16 and 23..26, each group ordered
// by its minimal pattern value. Construction asserts 26 orbits, 6 open.
class MotifTable {
public:
    struct Entry {
        PatternClass cls = PatternClass::disconnected;
        std::uint8_t motif_id = 0;   // 1..26, valid patterns only
        std::uint8_t canonical = 0;  // minimal pattern value of the orbit
    };

    static const MotifTable& instance();

    const Entry& entry(std::uint8_t pattern) const { return entries_[pattern]; }

    // 0 for invalid patterns
    int motif_id(std::uint8_t pattern) const { return entries_[pattern].motif_id; }

    static bool is_open(int motif_id) { return motif_id >= 17 && motif_id <= 22; }

    // number of hyperwedges in every instance of the motif: 2 open, 3 closed
    static int wedges_per_instance(int motif_id) { return is_open(motif_id) ? 2 : 3; }

    std::uint8_t canonical_pattern(int motif_id) const { return canonical_[motif_id]; }
    const std::vector<std::uint8_t>& orbit(int motif_id) const { return orbits_[motif_id]; }

private:
    MotifTable();

    std::array<Entry, kNumPatterns> entries_;
    std::array<std::uint8_t, kNumMotifs + 1> canonical_{};
    std::array<std::vector<std::uint8_t>, kNumMotifs + 1> orbits_;
};

// Applies one of the 6 hyperedge relabelings to a pattern. perm maps
// position -> source, e.g. {1,0,2} swaps the first two hyperedges.
std::uint8_t permute_pattern(std::uint8_t pattern, const std::array<int, 3>& perm);

// Classification of a concrete triple. Pairwise overlaps are read from the
// projected graph; the triple overlap scans the smallest of the three edges.
// Cost O(min(|e_i|,|e_j|,|e_k|)).
RegionCardinalities region_cardinalities(const Hypergraph& g, const ProjectedGraph& p,
                                         EdgeId i, EdgeId j, EdgeId k);

// Motif id in 1..26. Throws std::invalid_argument for triples that are not
// three distinct, pairwise non-identical, connected hyperedges.
int classify_triple(const Hypergraph& g, const ProjectedGraph& p,
                    EdgeId i, EdgeId j, EdgeId k);

} // namespace hmotif

#endif
