#include "innosim/landscape.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "innosim/rng.hpp"

namespace innosim {

RastriginLandscape::RastriginLandscape(int genome_size, std::uint64_t landscape_seed)
    : genome_size_(genome_size), landscape_seed_(landscape_seed) {
    if (genome_size < 1)
        throw std::invalid_argument("landscape genome_size must be >= 1");
    Rng rng(landscape_seed);
    const std::size_t n = static_cast<std::size_t>(genome_size) * genome_size;
    weights_.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        weights_.push_back(uniform01(rng));
    compute_row_sums();
}

RastriginLandscape::RastriginLandscape(int genome_size, std::vector<double> weights)
    : genome_size_(genome_size), landscape_seed_(0), weights_(std::move(weights)) {
    if (genome_size < 1)
        throw std::invalid_argument("landscape genome_size must be >= 1");
    if (weights_.size() != static_cast<std::size_t>(genome_size) * genome_size)
        throw std::invalid_argument("landscape weights must have genome_size^2 entries");
    compute_row_sums();
}

void RastriginLandscape::compute_row_sums() {
    row_sums_.assign(genome_size_, 0.0);
    for (int i = 0; i < genome_size_; ++i)
        for (int j = 0; j < genome_size_; ++j)
            row_sums_[i] += weights_[static_cast<std::size_t>(i) * genome_size_ + j];
}

void RastriginLandscape::check_genome(std::span<const double> genome) const {
    if (genome.size() != static_cast<std::size_t>(genome_size_))
        throw std::invalid_argument("genome length does not match landscape genome_size");
}

double RastriginLandscape::value(std::span<const double> genome) const {
    check_genome(genome);
    double total = 0.0;
    for (int i = 0; i < genome_size_; ++i) {
        const double x = genome[i];
        total += row_sums_[i] * (x * x - 10.0 * std::cos(2.0 * std::numbers::pi * x));
    }
    return -total;
}

double RastriginLandscape::value_double_sum(std::span<const double> genome) const {
    check_genome(genome);
    double total = 0.0;
    for (int i = 0; i < genome_size_; ++i) {
        const double x = genome[i];
        const double bracket = x * x - 10.0 * std::cos(2.0 * std::numbers::pi * x);
        for (int j = 0; j < genome_size_; ++j)
            total += weights_[static_cast<std::size_t>(i) * genome_size_ + j] * bracket;
    }
    return -total;
}

double RastriginLandscape::weight_total() const {
    double total = 0.0;
    for (double w : weights_) total += w;
    return total;
}

nlohmann::json RastriginLandscape::to_json() const {
    return {{"genome_size", genome_size_},
            {"landscape_seed", landscape_seed_},
            {"weights", weights_}};
}

RastriginLandscape RastriginLandscape::from_json(const nlohmann::json& j) {
    RastriginLandscape land(j.at("genome_size").get<int>(),
                            j.at("weights").get<std::vector<double>>());
    land.landscape_seed_ = j.at("landscape_seed").get<std::uint64_t>();
    return land;
}

RastriginLandscape make_rastrigin_landscape(int genome_size, std::uint64_t landscape_seed) {
    return RastriginLandscape(genome_size, landscape_seed);
}

}  // namespace innosim
