#ifndef HMOTIF_MEMOIZED_HPP
#define HMOTIF_MEMOIZED_HPP

#include <atomic>
#include <cstdint>
#include <list>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "hmotif/hypergraph.hpp"
#include "hmotif/projection.hpp"
#include "hmotif/sampling.hpp"

namespace hmotif {

enum class PinPolicy { degree_priority, random, lru };

PinPolicy parse_pin_policy(const std::string& name);
const char* pin_policy_name(PinPolicy p);

struct MemoConfig {
    std::size_t budget_entries = 0; // max total cached (neighbor, ω) entries
    PinPolicy policy = PinPolicy::degree_priority;
    std::uint64_t seed = 0;         // stream for the random policy
};

struct MemoStats {
    std::uint64_t constructions = 0; // neighborhoods built from the hypergraph
    std::uint64_t hits = 0;          // served from cache
    std::size_t cached_entries = 0;
};

// Hyperwedge index without neighborhoods: each wedge once as (i, j), i < j,
// in the same lexicographic order the full projection uses, plus |N_ei| per
// hyperedge. Needs O(|∧|) space for the pairs but stores no overlaps.
struct WedgeIndex {
    std::vector<std::pair<EdgeId, EdgeId>> wedges;
    std::vector<std::uint32_t> degrees;
};

WedgeIndex build_wedge_index(const Hypergraph& g, unsigned workers = 1);

// On-the-fly neighborhood source with a bounded memoization cache. A cached
// neighborhood is always exact, so results never depend on the budget or
// policy, only the amount of recomputation does.
//
// degree_priority and random pin a static set per run, chosen by walking the
// priority order (proxy score Σ_{v∈e_i}(|E_v|−1) descending, or a seeded
// shuffle) and reserving each edge's true neighborhood size while the budget
// allows; nothing is evicted. lru caches on use and evicts whole
// least-recently-used neighborhoods.
class NeighborhoodProvider {
public:
    NeighborhoodProvider(const Hypergraph& g, const MemoConfig& cfg,
                         const std::vector<std::uint32_t>* degrees = nullptr);

    // exact neighborhood of e_i, cached per policy
    std::shared_ptr<const NeighborList> get(EdgeId i);

    MemoStats stats() const;
    bool pinned(EdgeId i) const { return policy_ != PinPolicy::lru && pin_[i]; }

private:
    void note_use_lru(EdgeId i, std::shared_ptr<const NeighborList> nbrs);

    const Hypergraph* g_;
    std::size_t budget_;
    PinPolicy policy_;
    std::vector<char> pin_;                                     // static pin set
    std::vector<std::shared_ptr<const NeighborList>> slots_;    // pinned cache
    std::unique_ptr<std::atomic<std::uint8_t>[]> slot_ready_;
    mutable std::mutex mutex_;                                  // guards slot fills and lru state
    std::unordered_map<EdgeId, std::list<EdgeId>::iterator> lru_pos_;
    std::list<EdgeId> lru_order_;                               // most recent first
    std::unordered_map<EdgeId, std::shared_ptr<const NeighborList>> lru_cache_;
    std::size_t lru_entries_ = 0;
    std::atomic<std::uint64_t> constructions_{0};
    std::atomic<std::uint64_t> hits_{0};
    std::atomic<std::size_t> pinned_entries_{0};
};

// Hyperwedge sampling over the lightweight wedge index with neighborhoods
// from the provider. For equal seed and workers the estimate is identical
// to count_approx_wedge on the full projection, at every budget.
EstimateVector wedge_sampling_with_cache(const Hypergraph& g, NeighborhoodProvider& np,
                                         const WedgeIndex& index, const SamplerConfig& cfg);

} // namespace hmotif

#endif
