#ifndef HMOTIF_COUNTS_HPP
#define HMOTIF_COUNTS_HPP

#include <array>
#include <cstdint>
#include <string>

namespace hmotif {

// Exact per-motif instance counts, indexed by motif id 1..26 (slot id-1).
// Totals on real datasets exceed 32 bits, so counts are 64-bit.
struct CountVector {
    std::array<std::uint64_t, 26> counts{};

    std::uint64_t& operator[](int motif_id) { return counts[motif_id - 1]; }
    std::uint64_t operator[](int motif_id) const { return counts[motif_id - 1]; }

    std::uint64_t total() const {
        std::uint64_t s = 0;
        for (auto c : counts) s += c;
        return s;
    }

    bool operator==(const CountVector&) const = default;

    std::array<double, 26> as_doubles() const {
        std::array<double, 26> d{};
        for (int t = 0; t < 26; ++t) d[t] = static_cast<double>(counts[t]);
        return d;
    }
};

enum class SamplerKind { hyperedge, hyperwedge };

// Unbiased per-motif estimates, plus the configuration that produced them.
struct EstimateVector {
    std::array<double, 26> estimates{};
    SamplerKind kind = SamplerKind::hyperedge;
    std::uint64_t samples = 0;   // s for hyperedge sampling, r for hyperwedge sampling
    double alpha = 0.0;          // s/|E| or r/|∧|

    double& operator[](int motif_id) { return estimates[motif_id - 1]; }
    double operator[](int motif_id) const { return estimates[motif_id - 1]; }
};

// Pair-overlap statistics of motif instances, used by the variance formulas:
// p[t-1][l] = number of pairs of motif-t instances sharing exactly l hyperedges,
// q[t-1][n] = number of pairs sharing exactly n hyperwedges.
struct OverlapStats {
    std::array<std::array<std::uint64_t, 3>, 26> p{};
    std::array<std::array<std::uint64_t, 2>, 26> q{};
};

} // namespace hmotif

#endif
