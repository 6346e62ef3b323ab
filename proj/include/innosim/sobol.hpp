#ifndef INNOSIM_SOBOL_HPP
#define INNOSIM_SOBOL_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace innosim {

// Point estimates of first-order and total-order indices for every input
// column. `degenerate` marks a zero-variance output (all indices forced 0).
struct SobolEstimates {
    std::vector<double> first_order;
    std::vector<double> total_order;
    bool degenerate = false;
};

// Estimators over a Saltelli layout [A; B; A_B^(i)]:
//   V_i = (1/N) sum_j f(B)_j (f(A_B^(i))_j - f(A)_j)        first order
//   E_i = (1/2N) sum_j (f(A)_j - f(A_B^(i))_j)^2            total order
//   V   = sample variance of the pooled A and B outputs
// Summation is in fixed row order, so results do not depend on thread count.
SobolEstimates estimate_sobol(std::span<const double> outputs_a,
                              std::span<const double> outputs_b,
                              const std::vector<std::vector<double>>& outputs_abi);

struct SobolRow {
    std::string parameter;
    double first_order = 0.0;
    double first_ci = 0.0;  // bootstrap percentile half-width
    double total_order = 0.0;
    double total_ci = 0.0;
    bool first_significant = false;
    bool total_significant = false;
    bool degenerate = false;
};

struct BootstrapOptions {
    int n_boot = 200;
    double level = 0.95;
    std::uint64_t seed = 0;
};

// Resamples design rows with replacement, forms percentile intervals, and
// assimilates any index whose interval contains 0 to exactly 0.
std::vector<SobolRow> sobol_indices(std::span<const double> outputs_a,
                                    std::span<const double> outputs_b,
                                    const std::vector<std::vector<double>>& outputs_abi,
                                    std::span<const std::string> parameter_names,
                                    const BootstrapOptions& options = {});

}  // namespace innosim

#endif
