#ifndef HMOTIF_RANDOMIZE_HPP
#define HMOTIF_RANDOMIZE_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "hmotif/counts.hpp"
#include "hmotif/hypergraph.hpp"

namespace hmotif {

// Star expansion: bipartite view with node side V, hyperedge side E and one
// incidence edge per (v, e) with v ∈ e.
struct BipartiteView {
    std::vector<std::uint32_t> node_degrees;        // |E_v| per node
    std::vector<std::uint32_t> edge_degrees;        // |e_i| per hyperedge
    std::vector<std::pair<NodeId, EdgeId>> edges;   // all (v, e) incidences
    std::uint64_t incidence_count = 0;              // Σ_i |e_i| == edges.size()
};

BipartiteView to_bipartite(const Hypergraph& g);

// Exact inverse of the star expansion.
Hypergraph from_bipartite(const BipartiteView& b,
                          const std::vector<std::string>* tokens = nullptr);

// O(1) sampling from a fixed discrete distribution proportional to weights.
class AliasTable {
public:
    explicit AliasTable(const std::vector<std::uint32_t>& weights);
    std::size_t size() const { return prob_.size(); }
    template <typename RngT>
    std::size_t sample(RngT& rng) const {
        std::size_t col = static_cast<std::size_t>(rng.bounded(prob_.size()));
        return rng.uniform() < prob_[col] ? col : alias_[col];
    }

private:
    std::vector<double> prob_;
    std::vector<std::size_t> alias_;
};

// Chung-Lu randomization on the star expansion: draws Σ|e_i| candidate
// incidence pairs with both endpoints sampled independently proportional to
// their degrees, discards duplicate pairs, and converts back to a hypergraph
// (empty generated hyperedges dropped, identical ones merged). Node degree
// and hyperedge size distributions are preserved in expectation, up to
// collision loss.
Hypergraph randomize_hypergraph(const Hypergraph& g, std::uint64_t seed);

struct RandomizationConfig {
    unsigned trials = 5;
    std::uint64_t seed = 0;
};

// Counting strategy applied to each randomized hypergraph.
using CountingFn = std::function<std::array<double, 26>(const Hypergraph&)>;

struct NullCounts {
    std::array<double, 26> mean{};            // M_rand[t]
    std::vector<std::uint64_t> trial_seeds;   // per-trial streams, recorded for replay
};

// Mean per-motif count over cfg.trials independent randomizations. Each
// trial draws its hypergraph from stream derive_seed(seed, randomizer, trial).
NullCounts null_counts(const Hypergraph& g, const RandomizationConfig& cfg,
                       const CountingFn& counter);

} // namespace hmotif

#endif
