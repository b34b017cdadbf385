#include "hmotif/projection.hpp"

#include <algorithm>
#include <new>
#include <stdexcept>
#include <unordered_map>

#include "hmotif/parallel.hpp"

namespace hmotif {

namespace {

// neighbors of e_i with overlap counts, via the incidence lists of its
// members; each co-occurring node contributes 1 to exactly one ω
NeighborList neighborhood_of(const Hypergraph& g, EdgeId i,
                             std::unordered_map<EdgeId, std::uint32_t>& scratch) {
    scratch.clear();
    for (NodeId v : g.edge(i))
        for (EdgeId j : g.incident_edges(v))
            if (j != i) ++scratch[j];
    NeighborList out;
    out.reserve(scratch.size());
    for (auto [j, w] : scratch) out.push_back({j, w});
    std::sort(out.begin(), out.end(),
              [](const WeightedNeighbor& a, const WeightedNeighbor& b) { return a.id < b.id; });
    return out;
}

} // namespace

NeighborList compute_neighborhood(const Hypergraph& g, EdgeId i) {
    if (i >= g.num_edges()) throw std::out_of_range("hyperedge id out of range");
    std::unordered_map<EdgeId, std::uint32_t> scratch;
    return neighborhood_of(g, i, scratch);
}

std::uint32_t ProjectedGraph::overlap(EdgeId a, EdgeId b) const {
    const auto& nbrs = adjacency_[a];
    auto it = std::lower_bound(nbrs.begin(), nbrs.end(), b,
                               [](const WeightedNeighbor& n, EdgeId id) { return n.id < id; });
    return (it != nbrs.end() && it->id == b) ? it->overlap : 0;
}

ProjectedGraph project(const Hypergraph& g, unsigned workers) {
    ProjectedGraph p;
    const std::size_t m = g.num_edges();
    p.adjacency_.resize(m);

    try {
        parallel_blocks(m, workers, [&](unsigned, std::size_t begin, std::size_t end) {
            std::unordered_map<EdgeId, std::uint32_t> scratch;
            for (std::size_t i = begin; i < end; ++i)
                p.adjacency_[i] = neighborhood_of(g, static_cast<EdgeId>(i), scratch);
        });

        // each wedge once, (i, j) with i < j, lexicographic
        std::size_t wedge_total = 0;
        for (EdgeId i = 0; i < m; ++i)
            for (const auto& [j, w] : p.adjacency_[i])
                if (j > i) ++wedge_total;
        p.wedges_.reserve(wedge_total);
        for (EdgeId i = 0; i < m; ++i)
            for (const auto& [j, w] : p.adjacency_[i])
                if (j > i) p.wedges_.emplace_back(i, j);
    } catch (const std::bad_alloc&) {
        std::size_t reached = 0;
        for (const auto& nbrs : p.adjacency_) reached += nbrs.size();
        throw std::runtime_error("projection out of memory after " +
                                 std::to_string(reached / 2) + " hyperwedges");
    }
    return p;
}

} // namespace hmotif
