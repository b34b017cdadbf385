#ifndef HMOTIF_HYPERGRAPH_HPP
#define HMOTIF_HYPERGRAPH_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace hmotif {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

enum class InputFormat { whitespace, csv };

// In-memory hypergraph. Immutable after construction; node ids are dense
// 0..num_nodes()-1, hyperedge member lists are sorted and duplicate-free,
// and no two hyperedges have identical member sets.
class Hypergraph {
public:
    Hypergraph() = default;

    std::size_t num_nodes() const { return tokens_.size(); }
    std::size_t num_edges() const { return edges_.size(); }

    // sorted members of hyperedge i
    const std::vector<NodeId>& edge(EdgeId i) const { return edges_[i]; }
    std::size_t edge_size(EdgeId i) const { return edges_[i].size(); }
    const std::vector<std::vector<NodeId>>& edges() const { return edges_; }

    // sorted ids of hyperedges containing v (E_v)
    const std::vector<EdgeId>& incident_edges(NodeId v) const { return incidence_[v]; }

    // original input token of node v
    const std::string& token(NodeId v) const { return tokens_[v]; }

    bool edge_contains(EdgeId i, NodeId v) const;
    std::uint32_t overlap_size(EdgeId a, EdgeId b) const;           // |e_a ∩ e_b|
    std::uint32_t triple_overlap(EdgeId i, EdgeId j, EdgeId k) const; // |e_i ∩ e_j ∩ e_k|, scans smallest edge

    std::size_t duplicate_edges_dropped() const { return duplicate_edges_dropped_; }
    std::size_t total_membership() const; // Σ_i |e_i| == Σ_v |E_v|

    // Construction from raw member lists. Duplicate nodes within a list
    // collapse, empty lists are dropped, set-identical lists keep the first
    // occurrence only, node ids are remapped densely in first-appearance order.
    static Hypergraph from_tokens(const std::vector<std::vector<std::string>>& lines);
    static Hypergraph from_node_lists(const std::vector<std::vector<NodeId>>& lists,
                                      const std::vector<std::string>* tokens = nullptr);

private:
    std::vector<std::vector<NodeId>> edges_;
    std::vector<std::vector<EdgeId>> incidence_;
    std::vector<std::string> tokens_;
    std::size_t duplicate_edges_dropped_ = 0;
};

// Reads one hyperedge per line; '#' lines and blank lines are ignored.
// Tokens split on whitespace or, for csv, on commas.
Hypergraph load_hypergraph(const std::string& path, InputFormat format = InputFormat::whitespace);

// Writes the hypergraph back in the input format (one line per hyperedge,
// original tokens). Reloading yields an isomorphic structure.
void save_hypergraph(const Hypergraph& g, const std::string& path);

struct DegreeStats {
    std::size_t num_nodes = 0;
    std::size_t num_edges = 0;
    std::size_t max_edge_size = 0;
    std::map<std::size_t, std::size_t> degree_distribution;     // |E_v| -> #nodes
    std::map<std::size_t, std::size_t> edge_size_distribution;  // |e_i| -> #edges
};

DegreeStats degree_stats(const Hypergraph& g);

} // namespace hmotif

#endif
