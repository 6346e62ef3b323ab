#ifndef INNOSIM_NSGA2_HPP
#define INNOSIM_NSGA2_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "innosim/design.hpp"

namespace innosim {

// Candidate parameter point with a running sample store: reported objectives
// are means over n_samples evaluations.
struct Individual {
    std::vector<double> params;
    double sum_f = 0.0;  // first objective (maximized), accumulated
    double sum_d = 0.0;  // second objective (maximized), accumulated
    int n_samples = 0;
    int rank = 0;                // transient, from the latest sort
    double crowding = 0.0;       // transient

    double mean_f() const { return sum_f / n_samples; }
    double mean_d() const { return sum_d / n_samples; }
};

struct ArchivePoint {
    std::vector<double> params;
    double mean_f = 0.0;
    double mean_d = 0.0;
    int n_samples = 0;
    int rank = 0;
};

struct ParetoArchive {
    std::vector<std::string> param_names;
    std::vector<ArchivePoint> points;

    // Indices of points non-dominated in maximization of (mean_f, mean_d).
    std::vector<std::size_t> front() const;
};

// Objective function: returns the two objectives to MAXIMIZE for parameter
// vector x. Stochastic problems draw their noise from sample_seed;
// deterministic problems ignore it.
using Objective =
    std::function<std::array<double, 2>(std::span<const double> x, std::uint64_t sample_seed)>;

struct Nsga2Config {
    int population = 200;
    int iterations = 10000;  // steady-state iterations, one evaluation each
    std::uint64_t seed = 0;

    // Replication embedding for noisy objectives: the sample count enters as
    // a third (maximized) objective and iterations resample an existing
    // individual with probability resample_prob. Disable for deterministic
    // problems.
    bool noisy = true;
    double resample_prob = 0.1;
    int max_samples = 100;

    double crossover_eta = 2.0;
    double mutation_eta = 20.0;
};

using Nsga2Observer = std::function<void(int iteration, const std::vector<Individual>&)>;

// Steady-state NSGA2 minimizing (-f, -d[, -n_samples]). Deterministic in
// config.seed.
ParetoArchive optimize(const Objective& problem, const ParamSpace& space,
                       const Nsga2Config& config, const Nsga2Observer& observer = {});

// Non-dominated subset (minimization; dominance = <= everywhere, < somewhere).
// Returns indices into `points`.
std::vector<std::size_t> pareto_filter(const std::vector<std::vector<double>>& points);

// Standard crowding distance over one front of objective vectors: boundary
// points are infinite, interior points sum normalized neighbor gaps.
std::vector<double> crowding_distance(const std::vector<std::vector<double>>& front);

// Fronts of indices by non-dominated sorting (minimization), best first.
std::vector<std::vector<std::size_t>> non_dominated_sort(
    const std::vector<std::vector<double>>& points);

struct ParamStat {
    std::string name;
    double mean = 0.0;
    double sd = 0.0;
};

struct CompromiseSummary {
    std::vector<ArchivePoint> points;
    std::vector<ParamStat> parameter_stats;
    bool empty() const { return points.empty(); }
};

// Keeps archive points with n_samples >= min_samples, mean_f > f_threshold
// and mean_d > d_threshold; reports per-parameter mean and sample sd over the
// retained set.
CompromiseSummary compromise_filter(const ParetoArchive& archive, double f_threshold,
                                    double d_threshold, int min_samples);

// 2D hypervolume for minimization against a reference point.
double hypervolume_2d(const std::vector<std::array<double, 2>>& points,
                      const std::array<double, 2>& reference);

}  // namespace innosim

#endif
