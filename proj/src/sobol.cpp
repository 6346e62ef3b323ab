#include "innosim/sobol.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "innosim/rng.hpp"
#include "innosim/stats.hpp"

namespace innosim {

namespace {

SobolEstimates estimate_rows(std::span<const double> ya, std::span<const double> yb,
                             const std::vector<std::vector<double>>& yabi,
                             std::span<const std::size_t> rows) {
    const std::size_t n = rows.size();
    const int k = static_cast<int>(yabi.size());

    double mean = 0.0;
    for (const auto j : rows) mean += ya[j] + yb[j];
    mean /= static_cast<double>(2 * n);
    double var = 0.0;
    for (const auto j : rows) {
        var += (ya[j] - mean) * (ya[j] - mean);
        var += (yb[j] - mean) * (yb[j] - mean);
    }
    var /= static_cast<double>(2 * n - 1);

    SobolEstimates est;
    est.first_order.assign(k, 0.0);
    est.total_order.assign(k, 0.0);
    if (var <= 0.0) {
        est.degenerate = true;
        return est;
    }
    for (int i = 0; i < k; ++i) {
        const std::vector<double>& yi = yabi[i];
        double vi = 0.0, ei = 0.0;
        for (const auto j : rows) {
            vi += yb[j] * (yi[j] - ya[j]);
            const double d = ya[j] - yi[j];
            ei += d * d;
        }
        est.first_order[i] = vi / static_cast<double>(n) / var;
        est.total_order[i] = ei / (2.0 * static_cast<double>(n)) / var;
    }
    return est;
}

}  // namespace

SobolEstimates estimate_sobol(std::span<const double> outputs_a,
                              std::span<const double> outputs_b,
                              const std::vector<std::vector<double>>& outputs_abi) {
    const std::size_t n = outputs_a.size();
    if (n < 2) throw std::invalid_argument("estimate_sobol: need N >= 2");
    if (outputs_b.size() != n)
        throw std::invalid_argument("estimate_sobol: A/B output length mismatch");
    for (const auto& col : outputs_abi)
        if (col.size() != n)
            throw std::invalid_argument("estimate_sobol: A_B^(i) output length mismatch");
    std::vector<std::size_t> rows(n);
    for (std::size_t j = 0; j < n; ++j) rows[j] = j;
    return estimate_rows(outputs_a, outputs_b, outputs_abi, rows);
}

std::vector<SobolRow> sobol_indices(std::span<const double> outputs_a,
                                    std::span<const double> outputs_b,
                                    const std::vector<std::vector<double>>& outputs_abi,
                                    std::span<const std::string> parameter_names,
                                    const BootstrapOptions& options) {
    if (options.n_boot < 100)
        throw std::invalid_argument("sobol_indices: n_boot must be >= 100");
    const int k = static_cast<int>(outputs_abi.size());
    if (static_cast<int>(parameter_names.size()) != k)
        throw std::invalid_argument("sobol_indices: one name per input column required");

    const SobolEstimates point = estimate_sobol(outputs_a, outputs_b, outputs_abi);
    std::vector<SobolRow> table(k);
    for (int i = 0; i < k; ++i) {
        table[i].parameter = parameter_names[i];
        table[i].degenerate = point.degenerate;
    }
    if (point.degenerate) return table;  // all indices reported as 0

    const std::size_t n = outputs_a.size();
    Rng rng(options.seed);
    std::vector<std::vector<double>> boot_first(k), boot_total(k);
    for (int i = 0; i < k; ++i) {
        boot_first[i].reserve(options.n_boot);
        boot_total[i].reserve(options.n_boot);
    }
    std::vector<std::size_t> rows(n);
    for (int b = 0; b < options.n_boot; ++b) {
        for (std::size_t j = 0; j < n; ++j) rows[j] = uniform_index(rng, n);
        const SobolEstimates est = estimate_rows(outputs_a, outputs_b, outputs_abi, rows);
        for (int i = 0; i < k; ++i) {
            boot_first[i].push_back(est.degenerate ? 0.0 : est.first_order[i]);
            boot_total[i].push_back(est.degenerate ? 0.0 : est.total_order[i]);
        }
    }

    const double alpha = 1.0 - options.level;
    for (int i = 0; i < k; ++i) {
        std::sort(boot_first[i].begin(), boot_first[i].end());
        std::sort(boot_total[i].begin(), boot_total[i].end());
        const double f_lo = quantile_sorted(boot_first[i], alpha / 2.0);
        const double f_hi = quantile_sorted(boot_first[i], 1.0 - alpha / 2.0);
        const double t_lo = quantile_sorted(boot_total[i], alpha / 2.0);
        const double t_hi = quantile_sorted(boot_total[i], 1.0 - alpha / 2.0);
        table[i].first_ci = (f_hi - f_lo) / 2.0;
        table[i].total_ci = (t_hi - t_lo) / 2.0;
        table[i].first_significant = f_lo > 0.0 || f_hi < 0.0;
        table[i].total_significant = t_lo > 0.0 || t_hi < 0.0;
        table[i].first_order = table[i].first_significant ? point.first_order[i] : 0.0;
        table[i].total_order = table[i].total_significant ? point.total_order[i] : 0.0;
    }
    return table;
}

}  // namespace innosim
