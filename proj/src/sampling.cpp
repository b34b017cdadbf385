#include "hmotif/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "detail/wedge_core.hpp"
#include "hmotif/parallel.hpp"
#include "hmotif/rng.hpp"

namespace hmotif {

EstimateVector count_approx_edge(const Hypergraph& g, const ProjectedGraph& p,
                                 const SamplerConfig& cfg) {
    if (cfg.sample_count == 0) throw std::invalid_argument("sample_count must be >= 1");
    if (g.num_edges() == 0) throw std::invalid_argument("empty hypergraph");
    const MotifTable& table = MotifTable::instance();
    const std::size_t m = g.num_edges();
    const std::uint64_t s = cfg.sample_count;
    const unsigned workers = std::max(1u, cfg.workers);

    std::vector<CountVector> partial(workers);

    parallel_blocks(s, workers, [&](unsigned w, std::size_t begin, std::size_t end) {
        Rng rng(derive_seed(cfg.seed, seed_tag::edge_sampler, w));
        CountVector& tally = partial[w];
        std::vector<std::uint64_t> stamp(m, 0);
        std::uint64_t epoch = 0;

        for (std::size_t n = begin; n < end; ++n) {
            EdgeId i = static_cast<EdgeId>(rng.bounded(m));
            const NeighborList& nbr_i = p.neighbors(i);

            ++epoch;
            for (const auto& [k, w_ik] : nbr_i) stamp[k] = epoch;

            // every instance containing e_i, found through 1- and 2-hop
            // neighbors; local dedup keeps (j, k) with e_k ∉ N_ei or j < k
            for (std::size_t a = 0; a < nbr_i.size(); ++a) {
                EdgeId j = nbr_i[a].id;
                std::uint32_t w_ij = nbr_i[a].overlap;
                const NeighborList& nbr_j = p.neighbors(j);
                for (std::size_t b = a + 1; b < nbr_i.size(); ++b) { // k ∈ N_ei, j < k
                    EdgeId k = nbr_i[b].id;
                    std::uint32_t w_jk = detail::overlap_in(nbr_j, k);
                    ++tally[detail::tally_motif(g, table, i, j, k, w_ij, w_jk,
                                                nbr_i[b].overlap)];
                }
                for (const auto& [k, w_jk] : nbr_j) { // k ∈ N_ej \ N_ei
                    if (k == i || stamp[k] == epoch) continue;
                    ++tally[detail::tally_motif(g, table, i, j, k, w_ij, w_jk, 0)];
                }
            }
        }
    });

    CountVector tallies;
    for (const auto& part : partial)
        for (int t = 0; t < 26; ++t) tallies.counts[t] += part.counts[t];

    EstimateVector out;
    out.kind = SamplerKind::hyperedge;
    out.samples = s;
    out.alpha = double(s) / double(m);
    // each instance is tallied once per sampled member hyperedge, 3 per full pass
    const double scale = double(m) / (3.0 * double(s));
    for (int t = 1; t <= 26; ++t) out[t] = double(tallies[t]) * scale;
    return out;
}

EstimateVector count_approx_wedge(const Hypergraph& g, const ProjectedGraph& p,
                                  const SamplerConfig& cfg) {
    return detail::wedge_sample_tallies(
        g, p.wedges(), [&p](EdgeId i) { return &p.neighbors(i); }, cfg);
}

std::array<double, 26> theoretical_variance_edge(const CountVector& m, const OverlapStats& s,
                                                 std::uint64_t samples,
                                                 std::uint64_t num_edges) {
    if (samples == 0) throw std::invalid_argument("samples must be >= 1");
    std::array<double, 26> var{};
    const double e = double(num_edges);
    for (int t = 0; t < 26; ++t) {
        double v = double(m.counts[t]) * (e - 3.0) / (3.0 * double(samples));
        // covariances sum over ordered instance pairs: each unordered pair twice
        for (int l = 0; l <= 2; ++l)
            v += 2.0 * double(s.p[t][l]) * (double(l) * e - 9.0) / (9.0 * double(samples));
        var[t] = v;
    }
    return var;
}

std::array<double, 26> theoretical_variance_wedge(const CountVector& m, const OverlapStats& s,
                                                  std::uint64_t samples,
                                                  std::uint64_t num_wedges) {
    if (samples == 0) throw std::invalid_argument("samples must be >= 1");
    std::array<double, 26> var{};
    const double w = double(num_wedges);
    for (int t = 0; t < 26; ++t) {
        double v;
        if (MotifTable::is_open(t + 1)) {
            v = double(m.counts[t]) * (w - 2.0) / (2.0 * double(samples));
            for (int n = 0; n <= 1; ++n)
                v += 2.0 * double(s.q[t][n]) * (double(n) * w - 4.0) / (4.0 * double(samples));
        } else {
            v = double(m.counts[t]) * (w - 3.0) / (3.0 * double(samples));
            for (int n = 0; n <= 1; ++n)
                v += 2.0 * double(s.q[t][n]) * (double(n) * w - 9.0) / (9.0 * double(samples));
        }
        var[t] = v;
    }
    return var;
}

double relative_error(const CountVector& exact, const std::array<double, 26>& estimates) {
    double denom = 0.0, num = 0.0;
    for (int t = 0; t < 26; ++t) {
        denom += double(exact.counts[t]);
        num += std::abs(double(exact.counts[t]) - estimates[t]);
    }
    if (denom == 0.0) throw std::invalid_argument("relative_error: exact counts are all zero");
    return num / denom;
}

} // namespace hmotif
