#ifndef HMOTIF_DETAIL_WEDGE_CORE_HPP
#define HMOTIF_DETAIL_WEDGE_CORE_HPP

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hmotif/counts.hpp"
#include "hmotif/hypergraph.hpp"
#include "hmotif/motif_table.hpp"
#include "hmotif/parallel.hpp"
#include "hmotif/projection.hpp"
#include "hmotif/rng.hpp"
#include "hmotif/sampling.hpp"

namespace hmotif::detail {

inline std::uint32_t overlap_in(const NeighborList& nbrs, EdgeId id) {
    auto it = std::lower_bound(nbrs.begin(), nbrs.end(), id,
                               [](const WeightedNeighbor& n, EdgeId x) { return n.id < x; });
    return (it != nbrs.end() && it->id == id) ? it->overlap : 0;
}

inline int tally_motif(const Hypergraph& g, const MotifTable& table, EdgeId i, EdgeId j,
                       EdgeId k, std::uint32_t w_ij, std::uint32_t w_jk, std::uint32_t w_ki) {
    std::uint32_t w_ijk = g.triple_overlap(i, j, k);
    RegionCardinalities rc = regions_from_overlaps(g.edge_size(i), g.edge_size(j),
                                                   g.edge_size(k), w_ij, w_jk, w_ki, w_ijk);
    return table.entry(rc.pattern()).motif_id;
}

// Hyperwedge-sampling tally loop shared by the full-projection and memoized
// paths. provider(id) must return a dereferenceable handle to the sorted
// neighbor list of a hyperedge; tallies are integers, so the merged result
// is identical for any provider that serves exact neighborhoods.
template <typename Provider>
EstimateVector wedge_sample_tallies(const Hypergraph& g,
                                    const std::vector<std::pair<EdgeId, EdgeId>>& wedges,
                                    Provider&& provider, const SamplerConfig& cfg) {
    if (cfg.sample_count == 0) throw std::invalid_argument("sample_count must be >= 1");
    const MotifTable& table = MotifTable::instance();
    const std::size_t m = g.num_edges();
    const std::uint64_t r = cfg.sample_count;
    const unsigned workers = std::max(1u, cfg.workers);

    EstimateVector out;
    out.kind = SamplerKind::hyperwedge;
    out.samples = r;
    out.alpha = wedges.empty() ? 0.0 : double(r) / double(wedges.size());
    if (wedges.empty()) return out; // no hyperwedges: every estimate is 0

    std::vector<CountVector> partial(workers);

    parallel_blocks(r, workers, [&](unsigned w, std::uint64_t begin, std::uint64_t end) {
        Rng rng(derive_seed(cfg.seed, seed_tag::wedge_sampler, w));
        CountVector& tally = partial[w];
        std::vector<std::uint64_t> stamp(m, 0);
        std::uint64_t epoch = 0;

        for (std::uint64_t n = begin; n < end; ++n) {
            auto [i, j] = wedges[rng.bounded(wedges.size())];
            auto hi = provider(i);
            auto hj = provider(j);
            const NeighborList& nbr_i = *hi;
            const NeighborList& nbr_j = *hj;
            std::uint32_t w_ij = overlap_in(nbr_i, j);

            ++epoch;
            for (const auto& [k, w_ik] : nbr_i) stamp[k] = epoch;

            // e_k adjacent to e_i (may also be adjacent to e_j)
            for (const auto& [k, w_ik] : nbr_i) {
                if (k == j) continue;
                std::uint32_t w_jk = overlap_in(nbr_j, k);
                ++tally[tally_motif(g, table, i, j, k, w_ij, w_jk, w_ik)];
            }
            // e_k adjacent to e_j only
            for (const auto& [k, w_jk] : nbr_j) {
                if (k == i || stamp[k] == epoch) continue;
                ++tally[tally_motif(g, table, i, j, k, w_ij, w_jk, 0)];
            }
        }
    });

    CountVector tallies;
    for (const auto& part : partial)
        for (int t = 0; t < 26; ++t) tallies.counts[t] += part.counts[t];

    // every open-motif instance contains 2 hyperwedges, every closed one 3
    const double wedge_total = double(wedges.size());
    for (int t = 1; t <= 26; ++t) {
        double scale = wedge_total / (double(MotifTable::wedges_per_instance(t)) * double(r));
        out[t] = double(tallies[t]) * scale;
    }
    return out;
}

} // namespace hmotif::detail

#endif
