#ifndef HMOTIF_PROJECTION_HPP
#define HMOTIF_PROJECTION_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "hmotif/hypergraph.hpp"

namespace hmotif {

struct WeightedNeighbor {
    EdgeId id;
    std::uint32_t overlap; // ω = |e_i ∩ e_j| >= 1

    bool operator==(const WeightedNeighbor&) const = default;
};

using NeighborList = std::vector<WeightedNeighbor>; // sorted by id

// Weighted projected graph: hyperedges as vertices, hyperwedges as edges,
// ω(i,j) = |e_i ∩ e_j|. Adjacency is stored once per direction; the wedge
// index stores each hyperwedge once as (i, j) with i < j, ordered
// lexicographically, and is the sampling domain for wedge-based estimators.
class ProjectedGraph {
public:
    const NeighborList& neighbors(EdgeId i) const { return adjacency_[i]; }
    std::size_t degree(EdgeId i) const { return adjacency_[i].size(); }
    std::size_t num_edges() const { return adjacency_.size(); }

    const std::vector<std::pair<EdgeId, EdgeId>>& wedges() const { return wedges_; }
    std::size_t wedge_count() const { return wedges_.size(); }

    // ω(a,b), or 0 if the hyperedges are not adjacent
    std::uint32_t overlap(EdgeId a, EdgeId b) const;
    bool adjacent(EdgeId a, EdgeId b) const { return overlap(a, b) > 0; }

    friend ProjectedGraph project(const Hypergraph& g, unsigned workers);

private:
    std::vector<NeighborList> adjacency_;
    std::vector<std::pair<EdgeId, EdgeId>> wedges_;
};

// Builds the projected graph by scanning, for every hyperedge, the incidence
// lists of its members. Work is proportional to Σ over hyperwedges of
// |e_i ∩ e_j|. Parallel over hyperedges; result independent of worker count.
ProjectedGraph project(const Hypergraph& g, unsigned workers = 1);

// Neighborhood of a single hyperedge, computed without a full projection:
// same inner loops as project() restricted to e_i. Sorted by neighbor id.
NeighborList compute_neighborhood(const Hypergraph& g, EdgeId i);

} // namespace hmotif

#endif
