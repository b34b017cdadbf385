#include "hmotif/memoized.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "detail/wedge_core.hpp"
#include "hmotif/parallel.hpp"
#include "hmotif/rng.hpp"

namespace hmotif {

PinPolicy parse_pin_policy(const std::string& name) {
    if (name == "degree") return PinPolicy::degree_priority;
    if (name == "random") return PinPolicy::random;
    if (name == "lru") return PinPolicy::lru;
    throw std::invalid_argument("unknown memo policy: " + name);
}

const char* pin_policy_name(PinPolicy p) {
    switch (p) {
        case PinPolicy::degree_priority: return "degree";
        case PinPolicy::random: return "random";
        case PinPolicy::lru: return "lru";
    }
    return "?";
}

WedgeIndex build_wedge_index(const Hypergraph& g, unsigned workers) {
    const std::size_t m = g.num_edges();
    WedgeIndex idx;
    idx.degrees.assign(m, 0);

    // distinct neighbors per hyperedge, without storing overlaps; same
    // lexicographic (i, j) order as the full projection's wedge list
    std::vector<std::vector<EdgeId>> above(m); // neighbors j > i only
    parallel_blocks(m, workers, [&](unsigned, std::size_t begin, std::size_t end) {
        std::vector<EdgeId> nbrs;
        for (std::size_t i = begin; i < end; ++i) {
            nbrs.clear();
            for (NodeId v : g.edge(static_cast<EdgeId>(i)))
                for (EdgeId j : g.incident_edges(v))
                    if (j != i) nbrs.push_back(j);
            std::sort(nbrs.begin(), nbrs.end());
            nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
            idx.degrees[i] = static_cast<std::uint32_t>(nbrs.size());
            auto split = std::lower_bound(nbrs.begin(), nbrs.end(), static_cast<EdgeId>(i) + 1);
            above[i].assign(split, nbrs.end());
        }
    });

    std::size_t total = 0;
    for (const auto& a : above) total += a.size();
    idx.wedges.reserve(total);
    for (EdgeId i = 0; i < m; ++i)
        for (EdgeId j : above[i]) idx.wedges.emplace_back(i, j);
    return idx;
}

NeighborhoodProvider::NeighborhoodProvider(const Hypergraph& g, const MemoConfig& cfg,
                                           const std::vector<std::uint32_t>* degrees)
    : g_(&g), budget_(cfg.budget_entries), policy_(cfg.policy) {
    const std::size_t m = g.num_edges();
    pin_.assign(m, 0);
    slots_.resize(m);
    slot_ready_ = std::make_unique<std::atomic<std::uint8_t>[]>(m);
    for (std::size_t i = 0; i < m; ++i) slot_ready_[i].store(0, std::memory_order_relaxed);
    if (policy_ == PinPolicy::lru || budget_ == 0) return;

    // true neighborhood sizes, from the caller when it has them (the wedge
    // index records them) or from a size-only pass
    std::vector<std::uint32_t> sizes;
    if (degrees == nullptr) {
        sizes.assign(m, 0);
        std::vector<EdgeId> nbrs;
        for (EdgeId i = 0; i < m; ++i) {
            nbrs.clear();
            for (NodeId v : g.edge(i))
                for (EdgeId j : g.incident_edges(v))
                    if (j != i) nbrs.push_back(j);
            std::sort(nbrs.begin(), nbrs.end());
            sizes[i] = static_cast<std::uint32_t>(
                std::unique(nbrs.begin(), nbrs.end()) - nbrs.begin());
        }
        degrees = &sizes;
    }

    std::vector<EdgeId> order(m);
    std::iota(order.begin(), order.end(), 0);
    if (policy_ == PinPolicy::degree_priority) {
        // proxy score Σ_{v∈e_i}(|E_v|−1): an upper bound on |N_ei| that
        // needs no projection work
        std::vector<std::uint64_t> score(m, 0);
        for (EdgeId i = 0; i < m; ++i)
            for (NodeId v : g.edge(i))
                score[i] += g.incident_edges(v).size() - 1;
        std::stable_sort(order.begin(), order.end(),
                         [&](EdgeId a, EdgeId b) { return score[a] > score[b]; });
    } else {
        Rng rng(derive_seed(cfg.seed, seed_tag::memo_pin, 0));
        for (std::size_t i = m; i > 1; --i)
            std::swap(order[i - 1], order[rng.bounded(i)]);
    }

    // static pin set: walk the priority order, reserving true sizes while
    // the budget allows
    std::size_t reserved = 0;
    for (EdgeId i : order) {
        std::uint32_t need = (*degrees)[i];
        if (reserved + need > budget_) continue;
        reserved += need;
        pin_[i] = 1;
    }
}

std::shared_ptr<const NeighborList> NeighborhoodProvider::get(EdgeId i) {
    if (policy_ != PinPolicy::lru) {
        if (!pin_[i]) {
            constructions_.fetch_add(1, std::memory_order_relaxed);
            return std::make_shared<const NeighborList>(compute_neighborhood(*g_, i));
        }
        // pinned slots fill once and are never evicted; after the ready flag
        // is set the slot is immutable, so lock-free reads are safe
        if (slot_ready_[i].load(std::memory_order_acquire) == 1) {
            hits_.fetch_add(1, std::memory_order_relaxed);
            return slots_[i];
        }
        auto fresh = std::make_shared<const NeighborList>(compute_neighborhood(*g_, i));
        constructions_.fetch_add(1, std::memory_order_relaxed);
        std::lock_guard<std::mutex> lock(mutex_);
        if (slot_ready_[i].load(std::memory_order_relaxed) == 0) {
            slots_[i] = fresh;
            pinned_entries_.fetch_add(fresh->size(), std::memory_order_relaxed);
            slot_ready_[i].store(1, std::memory_order_release);
        }
        return slots_[i]; // duplicate materializations are idempotent
    }

    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = lru_cache_.find(i);
        if (it != lru_cache_.end()) {
            hits_.fetch_add(1, std::memory_order_relaxed);
            lru_order_.erase(lru_pos_[i]);
            lru_order_.push_front(i);
            lru_pos_[i] = lru_order_.begin();
            return it->second;
        }
    }
    auto fresh = std::make_shared<const NeighborList>(compute_neighborhood(*g_, i));
    constructions_.fetch_add(1, std::memory_order_relaxed);
    note_use_lru(i, fresh);
    return fresh;
}

void NeighborhoodProvider::note_use_lru(EdgeId i, std::shared_ptr<const NeighborList> nbrs) {
    if (nbrs->size() > budget_) return; // never fits
    std::lock_guard<std::mutex> lock(mutex_);
    if (lru_cache_.count(i)) return; // raced with another materialization
    while (lru_entries_ + nbrs->size() > budget_ && !lru_order_.empty()) {
        EdgeId victim = lru_order_.back();
        lru_order_.pop_back();
        lru_entries_ -= lru_cache_[victim]->size();
        lru_cache_.erase(victim);
        lru_pos_.erase(victim);
    }
    lru_entries_ += nbrs->size();
    lru_cache_[i] = std::move(nbrs);
    lru_order_.push_front(i);
    lru_pos_[i] = lru_order_.begin();
}

MemoStats NeighborhoodProvider::stats() const {
    MemoStats s;
    s.constructions = constructions_.load();
    s.hits = hits_.load();
    if (policy_ == PinPolicy::lru) {
        std::lock_guard<std::mutex> lock(mutex_);
        s.cached_entries = lru_entries_;
    } else {
        s.cached_entries = pinned_entries_.load();
    }
    return s;
}

EstimateVector wedge_sampling_with_cache(const Hypergraph& g, NeighborhoodProvider& np,
                                         const WedgeIndex& index, const SamplerConfig& cfg) {
    return detail::wedge_sample_tallies(
        g, index.wedges, [&np](EdgeId i) { return np.get(i); }, cfg);
}

} // namespace hmotif
