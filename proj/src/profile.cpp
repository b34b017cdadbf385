#include "hmotif/profile.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace hmotif {

SignificanceVector significance(const std::array<double, 26>& real_counts,
                                const std::array<double, 26>& null_counts,
                                double epsilon) {
    if (epsilon <= 0.0) throw std::invalid_argument("epsilon must be positive");
    SignificanceVector sig;
    sig.real_counts = real_counts;
    sig.null_counts = null_counts;
    sig.epsilon = epsilon;
    for (int t = 0; t < 26; ++t) {
        double m = real_counts[t], mr = null_counts[t];
        if (m < 0.0 || mr < 0.0) throw std::invalid_argument("counts must be non-negative");
        sig.delta[t] = (m - mr) / (m + mr + epsilon);
    }
    return sig;
}

std::array<double, 26> characteristic_profile(const SignificanceVector& sig) {
    double norm_sq = 0.0;
    for (double d : sig.delta) norm_sq += d * d;
    std::array<double, 26> cp{};
    if (norm_sq == 0.0) return cp; // all-zero significance maps to the zero profile
    double norm = std::sqrt(norm_sq);
    for (int t = 0; t < 26; ++t) cp[t] = sig.delta[t] / norm;
    return cp;
}

std::array<double, 26> relative_count(const std::array<double, 26>& real_counts,
                                      const std::array<double, 26>& null_counts) {
    std::array<double, 26> rc{};
    for (int t = 0; t < 26; ++t) {
        double m = real_counts[t], mr = null_counts[t];
        rc[t] = (m + mr) > 0.0 ? (m - mr) / (m + mr) : 0.0;
    }
    return rc;
}

namespace {

// rank 1 = largest count; ties broken by motif id ascending
std::array<int, 26> ranks_desc(const std::array<double, 26>& counts) {
    std::array<int, 26> idx{};
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        if (counts[a] != counts[b]) return counts[a] > counts[b];
        return a < b;
    });
    std::array<int, 26> rank{};
    for (int pos = 0; pos < 26; ++pos) rank[idx[pos]] = pos + 1;
    return rank;
}

} // namespace

std::array<int, 26> rank_difference(const std::array<double, 26>& real_counts,
                                    const std::array<double, 26>& null_counts) {
    std::array<int, 26> real_rank = ranks_desc(real_counts);
    std::array<int, 26> null_rank = ranks_desc(null_counts);
    std::array<int, 26> rd{};
    for (int t = 0; t < 26; ++t) rd[t] = null_rank[t] - real_rank[t];
    return rd;
}

std::vector<std::vector<double>> cp_similarity_matrix(
    const std::vector<std::array<double, 26>>& profiles) {
    if (profiles.size() < 2)
        throw std::invalid_argument("similarity matrix needs at least two profiles");
    const std::size_t n = profiles.size();

    std::vector<double> mean(n, 0.0), sd(n, 0.0);
    for (std::size_t a = 0; a < n; ++a) {
        for (double x : profiles[a]) mean[a] += x;
        mean[a] /= 26.0;
        for (double x : profiles[a]) sd[a] += (x - mean[a]) * (x - mean[a]);
        sd[a] = std::sqrt(sd[a]);
    }

    std::vector<std::vector<double>> sim(n, std::vector<double>(n, 0.0));
    for (std::size_t a = 0; a < n; ++a) {
        sim[a][a] = 1.0;
        for (std::size_t b = a + 1; b < n; ++b) {
            double corr = 0.0;
            if (sd[a] > 0.0 && sd[b] > 0.0) {
                double cov = 0.0;
                for (int t = 0; t < 26; ++t)
                    cov += (profiles[a][t] - mean[a]) * (profiles[b][t] - mean[b]);
                corr = cov / (sd[a] * sd[b]);
                corr = std::clamp(corr, -1.0, 1.0);
            }
            sim[a][b] = sim[b][a] = corr;
        }
    }
    return sim;
}

} // namespace hmotif
