#include "hmotif/exact.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>

#include "hmotif/parallel.hpp"

namespace hmotif {

namespace {

// motif id of the triple (i, j, k) given the stored overlaps of the two
// wedges at e_i and the probed overlap w_jk
inline int motif_of(const Hypergraph& g, EdgeId i, EdgeId j, EdgeId k,
                    std::uint32_t w_ij, std::uint32_t w_ik, std::uint32_t w_jk,
                    const MotifTable& table) {
    std::uint32_t w_ijk = g.triple_overlap(i, j, k);
    RegionCardinalities rc = regions_from_overlaps(g.edge_size(i), g.edge_size(j),
                                                   g.edge_size(k), w_ij, w_jk, w_ik, w_ijk);
    return table.entry(rc.pattern()).motif_id;
}

// visits each motif instance exactly once: for every hyperedge e_i and
// every unordered neighbor pair {e_j, e_k}, keep the triple iff
// e_j ∩ e_k = ∅ or i < min(j, k)
template <typename Visit>
void scan_instances_of(const Hypergraph& g, const ProjectedGraph& p, EdgeId i,
                       const MotifTable& table, Visit&& visit) {
    const auto& nbrs = p.neighbors(i);
    for (std::size_t a = 0; a + 1 < nbrs.size(); ++a) {
        EdgeId j = nbrs[a].id;
        for (std::size_t b = a + 1; b < nbrs.size(); ++b) {
            EdgeId k = nbrs[b].id;
            std::uint32_t w_jk = p.overlap(j, k);
            if (w_jk != 0 && i > std::min(j, k)) continue;
            visit(j, k, motif_of(g, i, j, k, nbrs[a].overlap, nbrs[b].overlap, w_jk, table));
        }
    }
}

} // namespace

CountVector count_exact(const Hypergraph& g, const ProjectedGraph& p, unsigned workers) {
    const MotifTable& table = MotifTable::instance();
    const std::size_t m = g.num_edges();
    std::vector<CountVector> partial(std::max(1u, workers));

    parallel_blocks(m, workers, [&](unsigned w, std::size_t begin, std::size_t end) {
        CountVector& local = partial[w];
        for (std::size_t i = begin; i < end; ++i)
            scan_instances_of(g, p, static_cast<EdgeId>(i), table,
                              [&](EdgeId, EdgeId, int t) { ++local[t]; });
    });

    CountVector out;
    for (const auto& part : partial)
        for (int t = 0; t < 26; ++t) out.counts[t] += part.counts[t];
    return out;
}

std::uint64_t enumerate_instances(const Hypergraph& g, const ProjectedGraph& p,
                                  const InstanceSink& sink) {
    const MotifTable& table = MotifTable::instance();
    std::uint64_t emitted = 0;
    for (EdgeId i = 0; i < g.num_edges(); ++i) {
        bool keep_going = true;
        scan_instances_of(g, p, i, table, [&](EdgeId j, EdgeId k, int t) {
            if (!keep_going) return;
            if (!sink(i, j, k, t)) {
                keep_going = false;
                return;
            }
            ++emitted;
        });
        if (!keep_going) break;
    }
    return emitted;
}

std::vector<std::array<std::uint64_t, 26>> per_hyperedge_features(const Hypergraph& g,
                                                                  const ProjectedGraph& p,
                                                                  unsigned workers) {
    const MotifTable& table = MotifTable::instance();
    const std::size_t m = g.num_edges();

    // instances found while scanning e_i touch arbitrary e_j, e_k; relaxed
    // atomic increments keep the result exact and order-independent
    std::vector<std::array<std::atomic<std::uint64_t>, 26>> acc(m);

    parallel_blocks(m, workers, [&](unsigned, std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i)
            scan_instances_of(g, p, static_cast<EdgeId>(i), table,
                              [&](EdgeId j, EdgeId k, int t) {
                                  acc[i][t - 1].fetch_add(1, std::memory_order_relaxed);
                                  acc[j][t - 1].fetch_add(1, std::memory_order_relaxed);
                                  acc[k][t - 1].fetch_add(1, std::memory_order_relaxed);
                              });
    });

    std::vector<std::array<std::uint64_t, 26>> out(m);
    for (std::size_t i = 0; i < m; ++i)
        for (int t = 0; t < 26; ++t) out[i][t] = acc[i][t].load();
    return out;
}

OverlapStats overlap_stats(const Hypergraph& g, const ProjectedGraph& p,
                           std::uint64_t max_instances) {
    struct Instance {
        EdgeId e[3]; // sorted
        std::uint8_t motif;
    };
    std::vector<Instance> inst;
    enumerate_instances(g, p, [&](EdgeId i, EdgeId j, EdgeId k, int t) {
        if (inst.size() >= max_instances)
            throw std::length_error("overlap_stats: instance count exceeds cap of " +
                                    std::to_string(max_instances));
        Instance x{{i, j, k}, static_cast<std::uint8_t>(t)};
        std::sort(x.e, x.e + 3);
        inst.push_back(x);
        return true;
    });

    // group instances by motif, then compare all pairs within each motif
    std::array<std::vector<const Instance*>, 26> by_motif;
    for (const auto& x : inst) by_motif[x.motif - 1].push_back(&x);

    OverlapStats s;
    for (int t = 0; t < 26; ++t) {
        const auto& list = by_motif[t];
        for (std::size_t a = 0; a < list.size(); ++a) {
            for (std::size_t b = a + 1; b < list.size(); ++b) {
                const auto& x = *list[a];
                const auto& y = *list[b];
                EdgeId shared[3];
                auto end = std::set_intersection(x.e, x.e + 3, y.e, y.e + 3, shared);
                int l = static_cast<int>(end - shared);
                ++s.p[t][l]; // instances are distinct, so l <= 2
                // a shared hyperwedge requires a shared adjacent pair; two
                // distinct instances can share at most one wedge
                int n = (l == 2 && p.adjacent(shared[0], shared[1])) ? 1 : 0;
                ++s.q[t][n];
            }
        }
    }
    return s;
}

} // namespace hmotif
