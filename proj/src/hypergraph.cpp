#include "hmotif/hypergraph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace hmotif {

namespace {

// hash of a sorted node list, for set-identical hyperedge dedup
struct NodeListHash {
    std::size_t operator()(const std::vector<NodeId>& v) const {
        std::size_t h = 0x811c9dc5u;
        for (NodeId x : v) {
            h ^= x + 0x9e3779b9u + (h << 6) + (h >> 2);
        }
        return h;
    }
};

} // namespace

bool Hypergraph::edge_contains(EdgeId i, NodeId v) const {
    const auto& e = edges_[i];
    return std::binary_search(e.begin(), e.end(), v);
}

std::uint32_t Hypergraph::overlap_size(EdgeId a, EdgeId b) const {
    const auto& ea = edges_[a];
    const auto& eb = edges_[b];
    const auto& small = ea.size() <= eb.size() ? ea : eb;
    const auto& large = ea.size() <= eb.size() ? eb : ea;
    std::uint32_t n = 0;
    for (NodeId v : small)
        if (std::binary_search(large.begin(), large.end(), v)) ++n;
    return n;
}

std::uint32_t Hypergraph::triple_overlap(EdgeId i, EdgeId j, EdgeId k) const {
    EdgeId a = i, b = j, c = k;
    if (edge_size(b) < edge_size(a)) std::swap(a, b);
    if (edge_size(c) < edge_size(a)) std::swap(a, c);
    const auto& eb = edges_[b];
    const auto& ec = edges_[c];
    std::uint32_t n = 0;
    for (NodeId v : edges_[a])
        if (std::binary_search(eb.begin(), eb.end(), v) &&
            std::binary_search(ec.begin(), ec.end(), v))
            ++n;
    return n;
}

std::size_t Hypergraph::total_membership() const {
    std::size_t s = 0;
    for (const auto& e : edges_) s += e.size();
    return s;
}

Hypergraph Hypergraph::from_tokens(const std::vector<std::vector<std::string>>& lines) {
    Hypergraph g;
    std::unordered_map<std::string, NodeId> ids;
    std::unordered_map<std::vector<NodeId>, EdgeId, NodeListHash> seen;

    for (const auto& line : lines) {
        if (line.empty()) continue;
        std::vector<NodeId> members;
        members.reserve(line.size());
        for (const auto& tok : line) {
            auto [it, inserted] = ids.try_emplace(tok, static_cast<NodeId>(g.tokens_.size()));
            if (inserted) g.tokens_.push_back(tok);
            members.push_back(it->second);
        }
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        auto [it, inserted] = seen.try_emplace(members, static_cast<EdgeId>(g.edges_.size()));
        if (!inserted) {
            ++g.duplicate_edges_dropped_;
            continue;
        }
        g.edges_.push_back(std::move(members));
    }

    g.incidence_.resize(g.tokens_.size());
    for (EdgeId i = 0; i < g.edges_.size(); ++i)
        for (NodeId v : g.edges_[i]) g.incidence_[v].push_back(i);
    return g;
}

Hypergraph Hypergraph::from_node_lists(const std::vector<std::vector<NodeId>>& lists,
                                       const std::vector<std::string>* tokens) {
    std::vector<std::vector<std::string>> lines;
    lines.reserve(lists.size());
    for (const auto& l : lists) {
        std::vector<std::string> line;
        line.reserve(l.size());
        for (NodeId v : l)
            line.push_back(tokens ? (*tokens)[v] : std::to_string(v));
        lines.push_back(std::move(line));
    }
    return from_tokens(lines);
}

Hypergraph load_hypergraph(const std::string& path, InputFormat format) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open hypergraph file: " + path);

    std::vector<std::vector<std::string>> lines;
    std::string raw;
    while (std::getline(in, raw)) {
        if (raw.empty() || raw[0] == '#') continue;
        std::vector<std::string> toks;
        if (format == InputFormat::csv) {
            std::stringstream ss(raw);
            std::string tok;
            while (std::getline(ss, tok, ',')) {
                // trim surrounding whitespace
                auto b = tok.find_first_not_of(" \t\r");
                auto e = tok.find_last_not_of(" \t\r");
                if (b != std::string::npos) toks.push_back(tok.substr(b, e - b + 1));
            }
        } else {
            std::stringstream ss(raw);
            std::string tok;
            while (ss >> tok) toks.push_back(tok);
        }
        if (!toks.empty()) lines.push_back(std::move(toks));
    }

    Hypergraph g = Hypergraph::from_tokens(lines);
    if (g.num_edges() == 0) throw std::runtime_error("empty dataset: " + path);
    return g;
}

void save_hypergraph(const Hypergraph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write hypergraph file: " + path);
    for (EdgeId i = 0; i < g.num_edges(); ++i) {
        const auto& e = g.edge(i);
        for (std::size_t n = 0; n < e.size(); ++n) {
            if (n) out << ' ';
            out << g.token(e[n]);
        }
        out << '\n';
    }
}

DegreeStats degree_stats(const Hypergraph& g) {
    DegreeStats s;
    s.num_nodes = g.num_nodes();
    s.num_edges = g.num_edges();
    for (EdgeId i = 0; i < g.num_edges(); ++i) {
        std::size_t sz = g.edge_size(i);
        s.max_edge_size = std::max(s.max_edge_size, sz);
        ++s.edge_size_distribution[sz];
    }
    for (NodeId v = 0; v < g.num_nodes(); ++v)
        ++s.degree_distribution[g.incident_edges(v).size()];
    return s;
}

} // namespace hmotif
