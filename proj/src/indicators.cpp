#include "innosim/indicators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace innosim {

double best_fitness(std::span<const double> fitness) {
    if (fitness.empty()) throw std::invalid_argument("best_fitness: no firms");
    return *std::max_element(fitness.begin(), fitness.end());
}

double average_fitness(std::span<const double> fitness) {
    if (fitness.empty()) throw std::invalid_argument("average_fitness: no firms");
    double sum = 0.0;
    for (double y : fitness) sum += y;
    return sum / static_cast<double>(fitness.size());
}

double fitness_relative_difference(std::span<const double> fitness) {
    if (fitness.empty()) throw std::invalid_argument("fitness_relative_difference: no firms");
    const auto [lo, hi] = std::minmax_element(fitness.begin(), fitness.end());
    const double scale = std::max(std::fabs(*hi), std::fabs(*lo));
    if (scale == 0.0) return 0.0;
    return (*hi - *lo) / scale;
}

double fitness_entropy(std::span<const double> fitness) {
    if (fitness.empty()) throw std::invalid_argument("fitness_entropy: no firms");
    const std::size_t n = fitness.size();
    if (n < 2) return 1.0;
    const double y_min = *std::min_element(fitness.begin(), fitness.end());
    double total = 0.0;
    for (double y : fitness) total += y - y_min;
    if (total == 0.0) return 1.0;  // all equal: uniform convention
    double h = 0.0;
    for (double y : fitness) {
        const double w = (y - y_min) / total;
        if (w > 0.0) h -= w * std::log(w);
    }
    return h / std::log(static_cast<double>(n));
}

namespace {

double cosine_similarity(std::span<const double> a, std::span<const double> b) {
    double dot = 0.0, na = 0.0, nb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        dot += a[i] * b[i];
        na += a[i] * a[i];
        nb += b[i] * b[i];
    }
    if (na == 0.0 || nb == 0.0) return 0.0;  // zero-norm convention
    return dot / (std::sqrt(na) * std::sqrt(nb));
}

}  // namespace

double product_diversity(const std::vector<std::vector<double>>& products) {
    const std::size_t n = products.size();
    if (n < 2) return 0.0;
    double sum = 0.0;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
            if (k == l) continue;
            sum += 1.0 - cosine_similarity(products[k], products[l]);
        }
    return sum / (2.0 * static_cast<double>(n) * static_cast<double>(n - 1));
}

}  // namespace innosim
