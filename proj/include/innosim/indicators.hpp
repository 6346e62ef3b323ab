#ifndef INNOSIM_INDICATORS_HPP
#define INNOSIM_INDICATORS_HPP

#include <span>
#include <vector>

namespace innosim {

// Per-tick macro indicators of the firm population. All five are pure
// functions of the current products and product fitnesses.
struct IndicatorVector {
    double best_fitness = 0.0;
    double avg_fitness = 0.0;
    double rel_diff = 0.0;   // (max - min) / max(|max|, |min|), 0 when degenerate
    double entropy = 0.0;    // entropy of min-shifted fitness shares, in [0,1]
    double diversity = 0.0;  // mean cosine dissimilarity of products, in [0,1]

    bool operator==(const IndicatorVector&) const = default;
};

inline constexpr int kNumIndicators = 5;
inline constexpr const char* kIndicatorNames[kNumIndicators] = {
    "best_fitness", "avg_fitness", "rel_diff", "entropy", "diversity"};

double best_fitness(std::span<const double> fitness);
double average_fitness(std::span<const double> fitness);
double fitness_relative_difference(std::span<const double> fitness);

// Entropy of the min-shifted fitness distribution, normalized by ln(N_f).
// Fitness values can be negative, so shares are built from y_k - y_min.
// Conventions: all-equal fitness (and the single-firm case) report 1.
double fitness_entropy(std::span<const double> fitness);

// Average cosine dissimilarity over ordered firm pairs, divided by
// 2*N_f*(N_f-1). Zero-norm products take cosine similarity 0.
double product_diversity(const std::vector<std::vector<double>>& products);

}  // namespace innosim

#endif
