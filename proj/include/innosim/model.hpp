#ifndef INNOSIM_MODEL_HPP
#define INNOSIM_MODEL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "innosim/indicators.hpp"
#include "innosim/landscape.hpp"
#include "innosim/rng.hpp"

namespace innosim {

// How step 3 (inter-firm exchange) draws interactions. Exact draws one
// Bernoulli per ordered cross-firm employee pair; Aggregated draws a binomial
// count per ordered firm pair and assigns it to distinct uniform pairs, which
// is distributionally equivalent and much faster for large firms.
enum class InteractionSampling { Exact, Aggregated };

struct ModelParams {
    int n_firms = 10;
    int largest_firm_size = 100;
    double size_hierarchy = 0.1;      // rank-size exponent, >= 0
    int genome_size = 10;
    int t_final = 100;                // >= 0; 0 means record the initial state only
    double crossover_prob = 0.5;      // per employee, per tick
    double crossover_share = 0.5;     // per gene, within a crossover or interaction
    double mutation_prob = 0.01;      // per gene, per tick
    double mutation_amplitude = 1.0;  // increment drawn uniform on [-a/2, a/2]
    double product_share = 0.5;       // share of employees reset to the product
    double interaction_prob = 1e-4;   // spatial interaction intensity
    double distance_decay = 100.0;    // interaction kernel length, > 0
    std::uint64_t seed = 0;
    std::uint64_t landscape_seed = 42;
    InteractionSampling interaction_sampling = InteractionSampling::Exact;

    // Throws std::invalid_argument naming the offending field.
    void validate() const;

    bool operator==(const ModelParams&) const = default;
};

struct Firm {
    int index = 0;
    double x = 0.0, y = 0.0;  // location in [0,100]^2, fixed over a run
    int size = 0;
    std::vector<std::vector<double>> employees;  // size genomes of length G
    std::vector<double> product;
    double product_fitness = 0.0;
};

struct ModelState {
    int time = 0;
    std::vector<Firm> firms;
    Rng rng;
};

struct SimulationResult {
    ModelParams params;
    std::vector<IndicatorVector> series;  // indexed by tick, length t_final + 1

    bool operator==(const SimulationResult&) const = default;
};

// Interaction counts of one inter-firm exchange substep, by ordered
// (recipient firm, donor firm) pair.
struct InterFirmCounts {
    int n_firms = 0;
    std::vector<long> counts;  // row-major n_firms x n_firms, diagonal unused

    long at(int recipient, int donor) const {
        return counts[static_cast<std::size_t>(recipient) * n_firms + donor];
    }
    long total() const;
};

// Firm sizes S_k = round(S_0 * k^-alpha), k = 1..n, round-half-to-even,
// clamped below at 1.
std::vector<int> rank_size_sizes(int largest_firm_size, double size_hierarchy, int n_firms);

// Probability that one ordered cross-firm employee pair interacts in step 3.
double interaction_probability(const ModelParams& params, const Firm& recipient,
                               const Firm& donor);

ModelState init_state(const ModelParams& params, const FitnessLandscape& landscape);

// Per-tick substeps, applied by step() in this order.
void intra_firm_exchange(ModelState& state, const ModelParams& params);
void mutate_genomes(ModelState& state, const ModelParams& params);
void select_products(ModelState& state, const ModelParams& params,
                     const FitnessLandscape& landscape);
InterFirmCounts inter_firm_exchange(ModelState& state, const ModelParams& params);

void step(ModelState& state, const ModelParams& params, const FitnessLandscape& landscape);

IndicatorVector compute_indicators(const ModelState& state);

// Full seeded run: builds the landscape from params unless one is supplied.
// Records indicators at t=0 and after each step. Optionally exposes the final
// state (for state dumps and tests).
SimulationResult run_model(const ModelParams& params);
SimulationResult run_model(const ModelParams& params, const FitnessLandscape& landscape,
                           ModelState* final_state = nullptr);

}  // namespace innosim

#endif
