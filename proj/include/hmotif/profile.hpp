#ifndef HMOTIF_PROFILE_HPP
#define HMOTIF_PROFILE_HPP

#include <array>
#include <vector>

namespace hmotif {

// Significance of each motif: Δ_t = (M[t] − M_rand[t]) / (M[t] + M_rand[t] + ε).
// Each Δ_t lies in (−1, 1) and is 0 when the counts agree.
struct SignificanceVector {
    std::array<double, 26> delta{};
    std::array<double, 26> real_counts{};
    std::array<double, 26> null_counts{};
    double epsilon = 1.0;
};

SignificanceVector significance(const std::array<double, 26>& real_counts,
                                const std::array<double, 26>& null_counts,
                                double epsilon = 1.0);

// Characteristic profile: CP_t = Δ_t / sqrt(Σ Δ_t²). The zero significance
// vector maps to the zero profile.
std::array<double, 26> characteristic_profile(const SignificanceVector& sig);

// (M[t] − M_rand[t]) / (M[t] + M_rand[t]), defined as 0 when both are 0.
std::array<double, 26> relative_count(const std::array<double, 26>& real_counts,
                                      const std::array<double, 26>& null_counts);

// Motifs ranked by descending count (ties by motif id ascending);
// RD_t = rank in the null vector − rank in the real vector.
std::array<int, 26> rank_difference(const std::array<double, 26>& real_counts,
                                    const std::array<double, 26>& null_counts);

// Pearson correlation matrix of characteristic profiles. A zero-variance
// profile correlates 0 with everything else and 1 with itself.
std::vector<std::vector<double>> cp_similarity_matrix(
    const std::vector<std::array<double, 26>>& profiles);

} // namespace hmotif

#endif
