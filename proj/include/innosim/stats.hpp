#ifndef INNOSIM_STATS_HPP
#define INNOSIM_STATS_HPP

#include <optional>
#include <span>
#include <vector>

namespace innosim {

double mean(std::span<const double> values);

// Sample standard deviation (n-1 denominator); 0 for fewer than two values.
double sample_sd(std::span<const double> values);

// Linear-interpolation quantile (R type 7) of an ascending-sorted vector.
double quantile_sorted(std::span<const double> sorted, double q);
double quantile(std::vector<double> values, double q);

struct Quartiles {
    double q1 = 0.0, median = 0.0, q3 = 0.0;
};
Quartiles quartiles(std::vector<double> values);

// mu/sigma stochastic-stability diagnostic; missing when sigma is 0 or n < 2.
std::optional<double> sharpe_ratio(double mu, double sigma, int n);

// 2|mu_i - mu_j| / (sigma_i + sigma_j); missing when both sigmas are 0.
std::optional<double> separation_distance(double mean_i, double sd_i, double mean_j,
                                          double sd_j);

// Ranks with ties replaced by their average rank (1-based).
std::vector<double> average_ranks(std::span<const double> values);

double pearson_correlation(std::span<const double> xs, std::span<const double> ys);
double spearman_correlation(std::span<const double> xs, std::span<const double> ys);

}  // namespace innosim

#endif
