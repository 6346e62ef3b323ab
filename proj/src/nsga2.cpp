#include "innosim/nsga2.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <limits>
#include <stdexcept>

#include "innosim/rng.hpp"
#include "innosim/stats.hpp"

namespace innosim {

namespace {

// a dominates b under minimization
bool dominates(std::span<const double> a, std::span<const double> b) {
    bool strict = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
        if (a[i] < b[i]) strict = true;
    }
    return strict;
}

}  // namespace

std::vector<std::vector<std::size_t>> non_dominated_sort(
    const std::vector<std::vector<double>>& points) {
    const std::size_t n = points.size();
    std::vector<std::vector<std::size_t>> dominated(n);
    std::vector<int> dominator_count(n, 0);
    std::vector<std::vector<std::size_t>> fronts;

    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q) {
            if (dominates(points[p], points[q])) {
                dominated[p].push_back(q);
                ++dominator_count[q];
            } else if (dominates(points[q], points[p])) {
                dominated[q].push_back(p);
                ++dominator_count[p];
            }
        }

    std::vector<std::size_t> current;
    for (std::size_t p = 0; p < n; ++p)
        if (dominator_count[p] == 0) current.push_back(p);
    while (!current.empty()) {
        fronts.push_back(current);
        std::vector<std::size_t> next;
        for (const auto p : current)
            for (const auto q : dominated[p])
                if (--dominator_count[q] == 0) next.push_back(q);
        std::sort(next.begin(), next.end());
        current = std::move(next);
    }
    return fronts;
}

std::vector<std::size_t> pareto_filter(const std::vector<std::vector<double>>& points) {
    std::vector<std::size_t> keep;
    for (std::size_t p = 0; p < points.size(); ++p) {
        bool dominated_by_any = false;
        for (std::size_t q = 0; q < points.size(); ++q)
            if (q != p && dominates(points[q], points[p])) {
                dominated_by_any = true;
                break;
            }
        if (!dominated_by_any) keep.push_back(p);
    }
    return keep;
}

std::vector<double> crowding_distance(const std::vector<std::vector<double>>& front) {
    const std::size_t n = front.size();
    if (n == 0) throw std::invalid_argument("crowding_distance: empty front");
    const std::size_t m = front[0].size();
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> distance(n, 0.0);
    if (n <= 2) {
        std::fill(distance.begin(), distance.end(), inf);
        return distance;
    }
    std::vector<std::size_t> order(n);
    for (std::size_t obj = 0; obj < m; ++obj) {
        for (std::size_t i = 0; i < n; ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return front[a][obj] < front[b][obj];
        });
        const double lo = front[order.front()][obj];
        const double hi = front[order.back()][obj];
        distance[order.front()] = inf;
        distance[order.back()] = inf;
        if (hi == lo) continue;  // degenerate objective adds no spread
        for (std::size_t i = 1; i + 1 < n; ++i)
            distance[order[i]] +=
                (front[order[i + 1]][obj] - front[order[i - 1]][obj]) / (hi - lo);
    }
    return distance;
}

std::vector<std::size_t> ParetoArchive::front() const {
    std::vector<std::vector<double>> objectives;
    objectives.reserve(points.size());
    for (const ArchivePoint& p : points) objectives.push_back({-p.mean_f, -p.mean_d});
    return pareto_filter(objectives);
}

namespace {

class SteadyStateNsga2 {
public:
    SteadyStateNsga2(const Objective& problem, const ParamSpace& space,
                     const Nsga2Config& config)
        : problem_(problem), space_(space), config_(config), rng_(config.seed) {
        space_.validate();
        if (config_.population < 4)
            throw std::invalid_argument("nsga2: population must be >= 4");
        if (config_.iterations < 1)
            throw std::invalid_argument("nsga2: iterations must be >= 1");
        k_ = space_.size();
        // Variation operates in design space: log10 dims are handled on
        // their log scale.
        lower_.resize(k_);
        upper_.resize(k_);
        for (int d = 0; d < k_; ++d) {
            if (space_.at(d).scale == AxisScale::Log10) {
                lower_[d] = std::log10(space_.at(d).lower);
                upper_[d] = std::log10(space_.at(d).upper);
            } else {
                lower_[d] = space_.at(d).lower;
                upper_[d] = space_.at(d).upper;
            }
        }
    }

    ParetoArchive run(const Nsga2Observer& observer) {
        population_.reserve(config_.population + 1);
        while (static_cast<int>(population_.size()) < config_.population) {
            Individual ind;
            ind.params.resize(k_);
            for (int d = 0; d < k_; ++d)
                ind.params[d] = uniform_real(rng_, lower_[d], upper_[d]);
            if (evaluate_into(ind)) population_.push_back(std::move(ind));
        }
        rank_population();

        for (int it = 0; it < config_.iterations; ++it) {
            if (config_.noisy && uniform01(rng_) < config_.resample_prob) {
                resample_one();
            } else {
                breed_and_insert();
            }
            if (observer) observer(it, population_);
        }
        rank_population();

        ParetoArchive archive;
        for (const ParamDim& d : space_.dims) archive.param_names.push_back(d.name);
        archive.points.reserve(population_.size());
        for (const Individual& ind : population_) {
            ArchivePoint p;
            p.params = external_params(ind.params);
            p.mean_f = ind.mean_f();
            p.mean_d = ind.mean_d();
            p.n_samples = ind.n_samples;
            p.rank = ind.rank;
            archive.points.push_back(std::move(p));
        }
        return archive;
    }

private:
    std::vector<double> external_params(const std::vector<double>& internal) const {
        std::vector<double> out(internal);
        for (int d = 0; d < k_; ++d)
            if (space_.at(d).scale == AxisScale::Log10) out[d] = std::pow(10.0, out[d]);
        return out;
    }

    bool evaluate_into(Individual& ind) {
        const std::uint64_t sample_seed = derive_seed(config_.seed, eval_counter_++);
        try {
            const auto [f, d] = problem_(external_params(ind.params), sample_seed);
            ind.sum_f += f;
            ind.sum_d += d;
            ind.n_samples += 1;
            return true;
        } catch (const std::exception& e) {
            std::cerr << "nsga2: evaluation failed, discarding point (" << e.what() << ")\n";
            return false;
        }
    }

    std::vector<std::vector<double>> objective_vectors() const {
        std::vector<std::vector<double>> objs;
        objs.reserve(population_.size());
        for (const Individual& ind : population_) {
            if (config_.noisy)
                objs.push_back({-ind.mean_f(), -ind.mean_d(),
                                -static_cast<double>(ind.n_samples)});
            else
                objs.push_back({-ind.mean_f(), -ind.mean_d()});
        }
        return objs;
    }

    void rank_population() {
        const auto objs = objective_vectors();
        const auto fronts = non_dominated_sort(objs);
        for (std::size_t f = 0; f < fronts.size(); ++f) {
            std::vector<std::vector<double>> front_objs;
            front_objs.reserve(fronts[f].size());
            for (const auto idx : fronts[f]) front_objs.push_back(objs[idx]);
            const auto crowd = crowding_distance(front_objs);
            for (std::size_t i = 0; i < fronts[f].size(); ++i) {
                population_[fronts[f][i]].rank = static_cast<int>(f);
                population_[fronts[f][i]].crowding = crowd[i];
            }
        }
        ranks_stale_ = false;
    }

    const Individual& tournament_pick() {
        const auto i = uniform_index(rng_, population_.size());
        const auto j = uniform_index(rng_, population_.size());
        const Individual& a = population_[i];
        const Individual& b = population_[j];
        if (a.rank != b.rank) return a.rank < b.rank ? a : b;
        return a.crowding >= b.crowding ? a : b;
    }

    void resample_one() {
        const auto idx = uniform_index(rng_, population_.size());
        Individual& ind = population_[idx];
        if (ind.n_samples >= config_.max_samples) {
            breed_and_insert();
            return;
        }
        evaluate_into(ind);
        ranks_stale_ = true;
    }

    void breed_and_insert() {
        if (ranks_stale_) rank_population();
        const Individual& p1 = tournament_pick();
        const Individual& p2 = tournament_pick();
        Individual child;
        child.params = sbx_crossover(p1.params, p2.params);
        polynomial_mutation(child.params);
        if (!evaluate_into(child)) return;
        population_.push_back(std::move(child));
        truncate_worst();
    }

    std::vector<double> sbx_crossover(const std::vector<double>& a,
                                      const std::vector<double>& b) {
        std::vector<double> c1(k_), c2(k_);
        for (int d = 0; d < k_; ++d) {
            if (uniform01(rng_) < 0.5) {
                const double u = uniform01(rng_);
                const double exponent = 1.0 / (config_.crossover_eta + 1.0);
                const double beta = u <= 0.5 ? std::pow(2.0 * u, exponent)
                                             : std::pow(1.0 / (2.0 * (1.0 - u)), exponent);
                c1[d] = 0.5 * ((1.0 + beta) * a[d] + (1.0 - beta) * b[d]);
                c2[d] = 0.5 * ((1.0 - beta) * a[d] + (1.0 + beta) * b[d]);
            } else {
                c1[d] = a[d];
                c2[d] = b[d];
            }
            c1[d] = std::clamp(c1[d], lower_[d], upper_[d]);
            c2[d] = std::clamp(c2[d], lower_[d], upper_[d]);
        }
        return uniform01(rng_) < 0.5 ? c1 : c2;
    }

    void polynomial_mutation(std::vector<double>& x) {
        const double rate = 1.0 / static_cast<double>(k_);
        for (int d = 0; d < k_; ++d) {
            if (uniform01(rng_) >= rate) continue;
            const double u = uniform01(rng_);
            const double exponent = 1.0 / (config_.mutation_eta + 1.0);
            const double delta = u < 0.5 ? std::pow(2.0 * u, exponent) - 1.0
                                         : 1.0 - std::pow(2.0 * (1.0 - u), exponent);
            x[d] = std::clamp(x[d] + delta * (upper_[d] - lower_[d]), lower_[d], upper_[d]);
        }
    }

    void truncate_worst() {
        rank_population();
        // drop the lowest-crowding member of the last front
        int worst_rank = 0;
        for (const Individual& ind : population_) worst_rank = std::max(worst_rank, ind.rank);
        std::size_t victim = population_.size();
        double victim_crowding = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < population_.size(); ++i)
            if (population_[i].rank == worst_rank &&
                population_[i].crowding < victim_crowding) {
                victim = i;
                victim_crowding = population_[i].crowding;
            }
        if (victim == population_.size()) victim = population_.size() - 1;
        population_.erase(population_.begin() + static_cast<std::ptrdiff_t>(victim));
        rank_population();
    }

    const Objective& problem_;
    ParamSpace space_;
    Nsga2Config config_;
    Rng rng_;
    int k_ = 0;
    std::vector<double> lower_, upper_;
    std::vector<Individual> population_;
    std::uint64_t eval_counter_ = 0;
    bool ranks_stale_ = false;
};

}  // namespace

ParetoArchive optimize(const Objective& problem, const ParamSpace& space,
                       const Nsga2Config& config, const Nsga2Observer& observer) {
    SteadyStateNsga2 solver(problem, space, config);
    return solver.run(observer);
}

CompromiseSummary compromise_filter(const ParetoArchive& archive, double f_threshold,
                                    double d_threshold, int min_samples) {
    if (archive.points.empty())
        throw std::invalid_argument("compromise_filter: empty archive");
    CompromiseSummary summary;
    for (const ArchivePoint& p : archive.points)
        if (p.n_samples >= min_samples && p.mean_f > f_threshold && p.mean_d > d_threshold)
            summary.points.push_back(p);
    if (summary.points.empty()) return summary;  // explicit empty marker

    const std::size_t k = archive.param_names.size();
    for (std::size_t d = 0; d < k; ++d) {
        std::vector<double> values;
        values.reserve(summary.points.size());
        for (const ArchivePoint& p : summary.points) values.push_back(p.params[d]);
        summary.parameter_stats.push_back(
            {archive.param_names[d], mean(values), sample_sd(values)});
    }
    return summary;
}

double hypervolume_2d(const std::vector<std::array<double, 2>>& points,
                      const std::array<double, 2>& reference) {
    std::vector<std::array<double, 2>> kept;
    for (const auto& p : points)
        if (p[0] < reference[0] && p[1] < reference[1]) kept.push_back(p);
    if (kept.empty()) return 0.0;
    std::sort(kept.begin(), kept.end());
    double volume = 0.0;
    double best_f2 = std::numeric_limits<double>::infinity();
    std::vector<std::array<double, 2>> sweep;
    for (const auto& p : kept) {
        if (p[1] < best_f2) {
            sweep.push_back(p);
            best_f2 = p[1];
        }
    }
    for (std::size_t i = 0; i < sweep.size(); ++i) {
        const double next_f1 = i + 1 < sweep.size() ? sweep[i + 1][0] : reference[0];
        volume += (next_f1 - sweep[i][0]) * (reference[1] - sweep[i][1]);
    }
    return volume;
}

}  // namespace innosim
