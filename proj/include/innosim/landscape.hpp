#ifndef INNOSIM_LANDSCAPE_HPP
#define INNOSIM_LANDSCAPE_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace innosim {

// A fitness landscape maps an idea genome (real vector of fixed length) to a
// scalar utility. Pure and immutable: safe to share across worker threads.
class FitnessLandscape {
public:
    virtual ~FitnessLandscape() = default;
    virtual int genome_size() const = 0;
    virtual double value(std::span<const double> genome) const = 0;
};

// Weighted Rastrigin landscape:
//   y(x) = -sum_{i,j} w_ij * (x_i^2 - 10 cos(2 pi x_i))
// with w a static G x G matrix of U[0,1] entries drawn from a seeded
// generator. The bracket depends only on the row index, so evaluation uses
// precomputed row sums; value_double_sum() keeps the literal double sum as a
// reference path.
class RastriginLandscape final : public FitnessLandscape {
public:
    RastriginLandscape(int genome_size, std::uint64_t landscape_seed);
    RastriginLandscape(int genome_size, std::vector<double> weights);

    int genome_size() const override { return genome_size_; }
    double value(std::span<const double> genome) const override;
    double value_double_sum(std::span<const double> genome) const;

    std::uint64_t landscape_seed() const { return landscape_seed_; }
    const std::vector<double>& weights() const { return weights_; }  // row-major
    double weight_total() const;

    nlohmann::json to_json() const;
    static RastriginLandscape from_json(const nlohmann::json& j);

private:
    int genome_size_;
    std::uint64_t landscape_seed_;
    std::vector<double> weights_;
    std::vector<double> row_sums_;

    void compute_row_sums();
    void check_genome(std::span<const double> genome) const;
};

RastriginLandscape make_rastrigin_landscape(int genome_size, std::uint64_t landscape_seed);

}  // namespace innosim

#endif
