#include "innosim/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace innosim {

namespace {

void require(bool ok, const char* message) {
    if (!ok) throw std::invalid_argument(message);
}

// round-half-to-even, matching the default FP rounding mode
long round_even(double v) {
    return static_cast<long>(std::nearbyint(v));
}

}  // namespace

void ModelParams::validate() const {
    require(n_firms >= 1, "n_firms must be >= 1");
    require(largest_firm_size >= 1, "largest_firm_size must be >= 1");
    require(size_hierarchy >= 0.0, "size_hierarchy must be >= 0");
    require(genome_size >= 1, "genome_size must be >= 1");
    require(t_final >= 0, "t_final must be >= 0");
    require(crossover_prob >= 0.0 && crossover_prob <= 1.0, "crossover_prob must be in [0,1]");
    require(crossover_share >= 0.0 && crossover_share <= 1.0, "crossover_share must be in [0,1]");
    require(mutation_prob >= 0.0 && mutation_prob <= 1.0, "mutation_prob must be in [0,1]");
    require(mutation_amplitude >= 0.0, "mutation_amplitude must be >= 0");
    require(product_share >= 0.0 && product_share <= 1.0, "product_share must be in [0,1]");
    require(interaction_prob >= 0.0 && interaction_prob <= 1.0, "interaction_prob must be in [0,1]");
    require(distance_decay > 0.0, "distance_decay must be > 0");
}

long InterFirmCounts::total() const {
    return std::accumulate(counts.begin(), counts.end(), 0L);
}

std::vector<int> rank_size_sizes(int largest_firm_size, double size_hierarchy, int n_firms) {
    require(largest_firm_size >= 1, "largest_firm_size must be >= 1");
    require(size_hierarchy >= 0.0, "size_hierarchy must be >= 0");
    require(n_firms >= 1, "n_firms must be >= 1");
    std::vector<int> sizes;
    sizes.reserve(n_firms);
    for (int k = 1; k <= n_firms; ++k) {
        const double s = largest_firm_size * std::pow(static_cast<double>(k), -size_hierarchy);
        sizes.push_back(static_cast<int>(std::max(1L, round_even(s))));
    }
    return sizes;
}

double interaction_probability(const ModelParams& params, const Firm& recipient,
                               const Firm& donor) {
    const double dx = recipient.x - donor.x;
    const double dy = recipient.y - donor.y;
    const double d = std::sqrt(dx * dx + dy * dy);
    return params.interaction_prob * std::exp(-d / params.distance_decay);
}

ModelState init_state(const ModelParams& params, const FitnessLandscape& landscape) {
    params.validate();
    if (landscape.genome_size() != params.genome_size)
        throw std::invalid_argument("landscape genome_size does not match params genome_size");

    ModelState state;
    state.time = 0;
    state.rng.seed(params.seed);

    const std::vector<int> sizes =
        rank_size_sizes(params.largest_firm_size, params.size_hierarchy, params.n_firms);

    // Draw order: firm locations (x then y, by firm index), then employee
    // genomes gene by gene (by firm, employee, gene), then one initial-product
    // pick per firm.
    state.firms.resize(params.n_firms);
    for (int k = 0; k < params.n_firms; ++k) {
        Firm& firm = state.firms[k];
        firm.index = k;
        firm.x = uniform_real(state.rng, 0.0, 100.0);
        firm.y = uniform_real(state.rng, 0.0, 100.0);
        firm.size = sizes[k];
    }
    for (Firm& firm : state.firms) {
        firm.employees.assign(firm.size, std::vector<double>(params.genome_size));
        for (auto& genome : firm.employees)
            for (double& gene : genome)
                gene = uniform_real(state.rng, -10.0, 10.0);
    }
    for (Firm& firm : state.firms) {
        const auto pick = uniform_index(state.rng, firm.employees.size());
        firm.product = firm.employees[pick];
        firm.product_fitness = landscape.value(firm.product);
    }
    return state;
}

void intra_firm_exchange(ModelState& state, const ModelParams& params) {
    if (params.crossover_prob == 0.0) return;
    for (Firm& firm : state.firms) {
        if (firm.size < 2) continue;  // no possible partner
        const std::vector<std::vector<double>> snapshot = firm.employees;
        for (std::size_t i = 0; i < firm.employees.size(); ++i) {
            if (!bernoulli(state.rng, params.crossover_prob)) continue;
            // uniform choice among the other employees of the same firm
            auto donor = uniform_index(state.rng, snapshot.size() - 1);
            if (donor >= i) ++donor;
            const std::vector<double>& donor_genome = snapshot[donor];
            std::vector<double>& genome = firm.employees[i];
            for (int g = 0; g < params.genome_size; ++g)
                if (bernoulli(state.rng, params.crossover_share))
                    genome[g] = donor_genome[g];
        }
    }
}

void mutate_genomes(ModelState& state, const ModelParams& params) {
    if (params.mutation_prob == 0.0 || params.mutation_amplitude == 0.0) return;
    const double half = params.mutation_amplitude / 2.0;
    for (Firm& firm : state.firms)
        for (auto& genome : firm.employees)
            for (double& gene : genome)
                if (bernoulli(state.rng, params.mutation_prob))
                    gene += uniform_real(state.rng, -half, half);
}

void select_products(ModelState& state, const ModelParams& params,
                     const FitnessLandscape& landscape) {
    for (Firm& firm : state.firms) {
        std::size_t best = 0;
        double best_fit = landscape.value(firm.employees[0]);
        for (std::size_t i = 1; i < firm.employees.size(); ++i) {
            const double fit = landscape.value(firm.employees[i]);
            if (fit > best_fit) {  // ties keep the lowest index
                best_fit = fit;
                best = i;
            }
        }
        firm.product = firm.employees[best];
        firm.product_fitness = best_fit;

        const long chosen = std::min<long>(round_even(params.product_share * firm.size),
                                           static_cast<long>(firm.size));
        if (chosen <= 0) continue;
        // partial Fisher-Yates: first `chosen` entries are a uniform draw
        // without replacement
        std::vector<std::size_t> order(firm.employees.size());
        std::iota(order.begin(), order.end(), 0);
        for (long i = 0; i < chosen; ++i) {
            const auto j = i + uniform_index(state.rng, order.size() - i);
            std::swap(order[i], order[j]);
            firm.employees[order[i]] = firm.product;
        }
    }
}

namespace {

struct PairRef {
    std::size_t recipient;
    std::size_t donor;
};

void apply_copy(std::vector<double>& recipient, const std::vector<double>& donor,
                double share, Rng& rng) {
    for (std::size_t g = 0; g < recipient.size(); ++g)
        if (bernoulli(rng, share))
            recipient[g] = donor[g];
}

}  // namespace

InterFirmCounts inter_firm_exchange(ModelState& state, const ModelParams& params) {
    const int n = static_cast<int>(state.firms.size());
    InterFirmCounts result;
    result.n_firms = n;
    result.counts.assign(static_cast<std::size_t>(n) * n, 0);
    if (params.interaction_prob == 0.0 || n < 2) return result;

    // pairwise interaction probabilities, fixed for the substep
    std::vector<double> pair_prob(static_cast<std::size_t>(n) * n, 0.0);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
            if (k != l)
                pair_prob[static_cast<std::size_t>(k) * n + l] =
                    interaction_probability(params, state.firms[k], state.firms[l]);

    // donors are read from a snapshot taken at substep start
    std::vector<std::vector<std::vector<double>>> snapshot(n);
    for (int k = 0; k < n; ++k) snapshot[k] = state.firms[k].employees;

    if (params.interaction_sampling == InteractionSampling::Exact) {
        // ordered pairs in (recipient firm, recipient employee, donor firm,
        // donor employee) lexicographic order
        for (int k = 0; k < n; ++k) {
            Firm& rec_firm = state.firms[k];
            for (std::size_t i = 0; i < rec_firm.employees.size(); ++i) {
                for (int l = 0; l < n; ++l) {
                    if (l == k) continue;
                    const double p = pair_prob[static_cast<std::size_t>(k) * n + l];
                    for (std::size_t j = 0; j < snapshot[l].size(); ++j) {
                        if (!bernoulli(state.rng, p)) continue;
                        apply_copy(rec_firm.employees[i], snapshot[l][j],
                                   params.crossover_share, state.rng);
                        ++result.counts[static_cast<std::size_t>(k) * n + l];
                    }
                }
            }
        }
        return result;
    }

    // Aggregated: one binomial count per ordered firm pair, assigned to
    // distinct uniform (recipient, donor) employee pairs. Drawing the count
    // and then a uniform subset of that size reproduces the per-pair
    // Bernoulli distribution exactly; applying in sorted order keeps the
    // per-recipient application order of the exact path.
    for (int k = 0; k < n; ++k) {
        Firm& rec_firm = state.firms[k];
        const auto s_k = rec_firm.employees.size();
        for (int l = 0; l < n; ++l) {
            if (l == k) continue;
            const double p = pair_prob[static_cast<std::size_t>(k) * n + l];
            const auto s_l = snapshot[l].size();
            const auto n_pairs = s_k * s_l;
            std::binomial_distribution<long> binom(static_cast<long>(n_pairs), p);
            const long count = binom(state.rng);
            if (count == 0) continue;
            // Floyd's algorithm: `count` distinct indices in [0, n_pairs)
            std::unordered_set<std::size_t> chosen;
            chosen.reserve(static_cast<std::size_t>(count) * 2);
            for (std::size_t m = n_pairs - count; m < n_pairs; ++m) {
                const auto t = uniform_index(state.rng, m + 1);
                chosen.insert(chosen.count(t) ? m : t);
            }
            std::vector<std::size_t> ordered(chosen.begin(), chosen.end());
            std::sort(ordered.begin(), ordered.end());
            for (const auto idx : ordered) {
                const std::size_t i = idx / s_l;
                const std::size_t j = idx % s_l;
                apply_copy(rec_firm.employees[i], snapshot[l][j],
                           params.crossover_share, state.rng);
            }
            result.counts[static_cast<std::size_t>(k) * n + l] += count;
        }
    }
    return result;
}

void step(ModelState& state, const ModelParams& params, const FitnessLandscape& landscape) {
    if (state.time >= params.t_final)
        throw std::logic_error("step: simulation already reached t_final");
    intra_firm_exchange(state, params);
    mutate_genomes(state, params);
    select_products(state, params, landscape);
    inter_firm_exchange(state, params);
    ++state.time;
}

IndicatorVector compute_indicators(const ModelState& state) {
    std::vector<double> fitness;
    fitness.reserve(state.firms.size());
    std::vector<std::vector<double>> products;
    products.reserve(state.firms.size());
    for (const Firm& firm : state.firms) {
        fitness.push_back(firm.product_fitness);
        products.push_back(firm.product);
    }
    IndicatorVector v;
    v.best_fitness = best_fitness(fitness);
    v.avg_fitness = average_fitness(fitness);
    v.rel_diff = fitness_relative_difference(fitness);
    v.entropy = fitness_entropy(fitness);
    v.diversity = product_diversity(products);
    return v;
}

SimulationResult run_model(const ModelParams& params) {
    const RastriginLandscape landscape(params.genome_size, params.landscape_seed);
    return run_model(params, landscape);
}

SimulationResult run_model(const ModelParams& params, const FitnessLandscape& landscape,
                           ModelState* final_state) {
    params.validate();
    ModelState state = init_state(params, landscape);
    SimulationResult result;
    result.params = params;
    result.series.reserve(params.t_final + 1);
    result.series.push_back(compute_indicators(state));
    for (int t = 0; t < params.t_final; ++t) {
        step(state, params, landscape);
        result.series.push_back(compute_indicators(state));
    }
    if (final_state) *final_state = std::move(state);
    return result;
}

}  // namespace innosim
