#ifndef HMOTIF_SAMPLING_HPP
#define HMOTIF_SAMPLING_HPP

#include <array>
#include <cstdint>

#include "hmotif/counts.hpp"
#include "hmotif/hypergraph.hpp"
#include "hmotif/motif_table.hpp"
#include "hmotif/projection.hpp"

namespace hmotif {

struct SamplerConfig {
    std::uint64_t sample_count = 1; // s for hyperedge sampling, r for hyperwedge sampling
    std::uint64_t seed = 0;
    unsigned workers = 1;
};

// Hyperedge sampling: draws sample_count hyperedges uniformly with
// replacement; for each sampled e_i tallies every instance containing e_i
// once, then rescales by |E|/(3s). Unbiased: E[estimate] = M[t].
EstimateVector count_approx_edge(const Hypergraph& g, const ProjectedGraph& p,
                                 const SamplerConfig& cfg);

// Hyperwedge sampling: draws sample_count hyperwedges uniformly with
// replacement from the wedge index; for each sampled ∧_ij tallies every
// instance containing it once, then rescales open motifs by |∧|/(2r) and
// closed motifs by |∧|/(3r). Unbiased: E[estimate] = M[t].
EstimateVector count_approx_wedge(const Hypergraph& g, const ProjectedGraph& p,
                                  const SamplerConfig& cfg);

// Variance of the hyperedge-sampling estimate. OverlapStats holds unordered
// pair counts and every unordered pair appears twice in the covariance sum:
//   Var = (1/3s)·M[t]·(|E|−3) + (2/9s)·Σ_{l=0..2} p_l[t]·(l·|E|−9)
std::array<double, 26> theoretical_variance_edge(const CountVector& m, const OverlapStats& s,
                                                 std::uint64_t samples, std::uint64_t num_edges);

// Variance of the hyperwedge-sampling estimate, same pair-count convention:
//   closed t: (1/3r)·M[t]·(|∧|−3) + (2/9r)·Σ_{n=0,1} q_n[t]·(n·|∧|−9)
//   open t:   (1/2r)·M[t]·(|∧|−2) + (2/4r)·Σ_{n=0,1} q_n[t]·(n·|∧|−4)
std::array<double, 26> theoretical_variance_wedge(const CountVector& m, const OverlapStats& s,
                                                  std::uint64_t samples, std::uint64_t num_wedges);

// Σ_t |M[t] − estimate[t]| / Σ_t M[t]. Throws std::invalid_argument when
// the exact counts are all zero.
double relative_error(const CountVector& exact, const std::array<double, 26>& estimates);

} // namespace hmotif

#endif
