#ifndef HMOTIF_EXACT_HPP
#define HMOTIF_EXACT_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "hmotif/counts.hpp"
#include "hmotif/hypergraph.hpp"
#include "hmotif/motif_table.hpp"
#include "hmotif/projection.hpp"

namespace hmotif {

// Exact count of every motif's instances. For each hyperedge e_i and each
// unordered pair {e_j, e_k} of its projected-graph neighbors, the triple is
// counted iff e_j ∩ e_k = ∅ or i < min(j, k), so each instance is counted
// exactly once. Parallel over hyperedges with per-worker counters merged at
// the end; the result is identical for any worker count.
CountVector count_exact(const Hypergraph& g, const ProjectedGraph& p, unsigned workers = 1);

// Per-instance consumer; return false to stop the enumeration early.
using InstanceSink = std::function<bool(EdgeId i, EdgeId j, EdgeId k, int motif_id)>;

// Emits every instance exactly once (same dedup condition as count_exact).
// Returns the number of instances emitted; a sink returning false aborts
// with the partial count.
std::uint64_t enumerate_instances(const Hypergraph& g, const ProjectedGraph& p,
                                  const InstanceSink& sink);

// HM26 features: feature[i][t-1] = number of motif-t instances containing
// hyperedge i. Σ over hyperedges of feature[t] == 3·M[t].
std::vector<std::array<std::uint64_t, 26>> per_hyperedge_features(const Hypergraph& g,
                                                                  const ProjectedGraph& p,
                                                                  unsigned workers = 1);

// Pairwise instance-overlap statistics, by comparison over the full
// enumerated instance list. Quadratic in the instance count; refuses with
// std::length_error when the count exceeds max_instances. The default cap
// bounds the pair scan at ~10^9 comparisons.
OverlapStats overlap_stats(const Hypergraph& g, const ProjectedGraph& p,
                           std::uint64_t max_instances = 50000);

} // namespace hmotif

#endif
