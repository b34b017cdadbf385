#include "hmotif/randomize.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "hmotif/rng.hpp"

namespace hmotif {

BipartiteView to_bipartite(const Hypergraph& g) {
    BipartiteView b;
    b.node_degrees.resize(g.num_nodes());
    b.edge_degrees.resize(g.num_edges());
    for (NodeId v = 0; v < g.num_nodes(); ++v)
        b.node_degrees[v] = static_cast<std::uint32_t>(g.incident_edges(v).size());
    for (EdgeId i = 0; i < g.num_edges(); ++i) {
        b.edge_degrees[i] = static_cast<std::uint32_t>(g.edge_size(i));
        b.incidence_count += g.edge_size(i);
        for (NodeId v : g.edge(i)) b.edges.emplace_back(v, i);
    }
    return b;
}

Hypergraph from_bipartite(const BipartiteView& b, const std::vector<std::string>* tokens) {
    std::vector<std::vector<NodeId>> groups(b.edge_degrees.size());
    for (auto [v, e] : b.edges) groups[e].push_back(v);
    return Hypergraph::from_node_lists(groups, tokens);
}

AliasTable::AliasTable(const std::vector<std::uint32_t>& weights) {
    const std::size_t n = weights.size();
    if (n == 0) throw std::invalid_argument("alias table needs at least one weight");
    prob_.resize(n);
    alias_.resize(n);

    double total = 0.0;
    for (auto w : weights) total += double(w);
    if (total <= 0.0) throw std::invalid_argument("alias table needs positive total weight");

    std::vector<double> scaled(n);
    for (std::size_t i = 0; i < n; ++i) scaled[i] = double(weights[i]) * double(n) / total;

    std::vector<std::size_t> small, large;
    for (std::size_t i = 0; i < n; ++i)
        (scaled[i] < 1.0 ? small : large).push_back(i);

    while (!small.empty() && !large.empty()) {
        std::size_t s = small.back();
        small.pop_back();
        std::size_t l = large.back();
        prob_[s] = scaled[s];
        alias_[s] = l;
        scaled[l] -= 1.0 - scaled[s];
        if (scaled[l] < 1.0) {
            large.pop_back();
            small.push_back(l);
        }
    }
    for (std::size_t i : large) {
        prob_[i] = 1.0;
        alias_[i] = i;
    }
    for (std::size_t i : small) { // leftover from fp rounding; mass is already ~1
        prob_[i] = 1.0;
        alias_[i] = i;
    }
}

Hypergraph randomize_hypergraph(const Hypergraph& g, std::uint64_t seed) {
    BipartiteView b = to_bipartite(g);
    AliasTable left(b.node_degrees);
    AliasTable right(b.edge_degrees);
    Rng rng(seed);

    // Σ|e_i| candidate incidence pairs, endpoints degree-proportional,
    // duplicates discarded
    std::vector<std::vector<NodeId>> groups(g.num_edges());
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(b.incidence_count * 2);
    for (std::uint64_t n = 0; n < b.incidence_count; ++n) {
        NodeId v = static_cast<NodeId>(left.sample(rng));
        EdgeId e = static_cast<EdgeId>(right.sample(rng));
        std::uint64_t key = (std::uint64_t(v) << 32) | e;
        if (seen.insert(key).second) groups[e].push_back(v);
    }

    std::vector<std::string> tokens(g.num_nodes());
    for (NodeId v = 0; v < g.num_nodes(); ++v) tokens[v] = g.token(v);
    // empty groups drop and identical groups merge inside the builder
    return Hypergraph::from_node_lists(groups, &tokens);
}

NullCounts null_counts(const Hypergraph& g, const RandomizationConfig& cfg,
                       const CountingFn& counter) {
    if (cfg.trials == 0) throw std::invalid_argument("trials must be >= 1");
    NullCounts out;
    out.trial_seeds.reserve(cfg.trials);
    for (unsigned trial = 0; trial < cfg.trials; ++trial)
        out.trial_seeds.push_back(derive_seed(cfg.seed, seed_tag::randomizer, trial));

    for (std::uint64_t trial_seed : out.trial_seeds) {
        Hypergraph randomized = randomize_hypergraph(g, trial_seed);
        std::array<double, 26> counts = counter(randomized);
        for (int t = 0; t < 26; ++t) out.mean[t] += counts[t];
    }
    for (int t = 0; t < 26; ++t) out.mean[t] /= double(cfg.trials);
    return out;
}

} // namespace hmotif
