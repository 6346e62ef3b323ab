#include "innosim/design.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "innosim/csv.hpp"
#include "innosim/rng.hpp"

namespace innosim {

int ParamSpace::index_of(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
        if (dims[i].name == name) return i;
    return -1;
}

void ParamSpace::validate() const {
    for (const ParamDim& d : dims) {
        if (!(d.lower < d.upper))
            throw std::invalid_argument("parameter space: lower must be < upper for " + d.name);
        if (d.scale == AxisScale::Log10 && d.lower <= 0.0)
            throw std::invalid_argument("parameter space: log10 scale requires lower > 0 for " +
                                        d.name);
    }
}

ParamSpace default_free_space() {
    return ParamSpace{{
        {"size_hierarchy", 0.1, 2.0, AxisScale::Linear},
        {"crossover_prob", 0.0, 1.0, AxisScale::Linear},
        {"crossover_share", 0.0, 1.0, AxisScale::Linear},
        {"mutation_prob", 0.0, 1.0, AxisScale::Linear},
        {"mutation_amplitude", 0.0, 2.0, AxisScale::Linear},
        {"product_share", 0.0, 1.0, AxisScale::Linear},
        {"interaction_prob", 0.0, 1e-4, AxisScale::Linear},
        {"distance_decay", 1.0, 100.0, AxisScale::Linear},
    }};
}

ParamSpace default_gsa_space() {
    ParamSpace space = default_free_space();
    space.dims.push_back({"seed", 0.0, 1.0, AxisScale::Linear});
    return space;
}

namespace {

double scale_unit(const ParamDim& dim, double u) {
    if (dim.scale == AxisScale::Log10) {
        const double lo = std::log10(dim.lower);
        const double hi = std::log10(dim.upper);
        return std::pow(10.0, lo + (hi - lo) * u);
    }
    return dim.lower + (dim.upper - dim.lower) * u;
}

std::vector<std::string> space_names(const ParamSpace& space) {
    std::vector<std::string> names;
    names.reserve(space.dims.size());
    for (const ParamDim& d : space.dims) names.push_back(d.name);
    return names;
}

}  // namespace

Design lhs_sample(const ParamSpace& space, int n, std::uint64_t seed) {
    space.validate();
    if (n < 1) throw std::invalid_argument("lhs_sample: n must be >= 1");
    const int k = space.size();
    Rng rng(seed);

    Design design;
    design.kind = DesignKind::Lhs;
    design.names = space_names(space);
    design.rows.assign(n, std::vector<double>(k));

    std::vector<int> strata(n);
    for (int d = 0; d < k; ++d) {
        std::iota(strata.begin(), strata.end(), 0);
        for (int i = n - 1; i > 0; --i) {
            const auto j = uniform_index(rng, static_cast<std::uint64_t>(i) + 1);
            std::swap(strata[i], strata[j]);
        }
        for (int i = 0; i < n; ++i) {
            const double u = (strata[i] + uniform01(rng)) / static_cast<double>(n);
            design.rows[i][d] = scale_unit(space.at(d), u);
        }
    }
    return design;
}

std::uint32_t halton_base(int dimension) {
    static constexpr std::uint32_t primes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31,
                                               37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79,
                                               83, 89, 97, 101, 103, 107, 109, 113, 127, 131};
    if (dimension < 0 || dimension >= static_cast<int>(std::size(primes)))
        throw std::invalid_argument("halton_base: dimension out of supported range");
    return primes[dimension];
}

double radical_inverse(std::uint64_t index, std::uint32_t base) {
    double result = 0.0;
    double inv = 1.0 / base;
    double factor = inv;
    while (index > 0) {
        result += static_cast<double>(index % base) * factor;
        index /= base;
        factor *= inv;
    }
    return result;
}

Design saltelli_design(const ParamSpace& space, int n_base, std::uint64_t seed,
                       BaseSampling sampling) {
    space.validate();
    if (n_base < 2) throw std::invalid_argument("saltelli_design: n_base must be >= 2");
    const int k = space.size();
    const int n = n_base;

    // unit-cube base matrices A and B
    std::vector<std::vector<double>> a(n, std::vector<double>(k));
    std::vector<std::vector<double>> b(n, std::vector<double>(k));
    if (sampling == BaseSampling::QuasiRandom) {
        // 2k-dimensional low-discrepancy stream: first k columns form A, the
        // rest form B. The seeded rotation shifts each column mod 1.
        Rng rng(seed);
        std::vector<double> shift(2 * k);
        for (double& s : shift) s = uniform01(rng);
        for (int j = 0; j < n; ++j) {
            const std::uint64_t idx = static_cast<std::uint64_t>(j) + 1;
            for (int d = 0; d < k; ++d) {
                double ua = radical_inverse(idx, halton_base(d)) + shift[d];
                double ub = radical_inverse(idx, halton_base(k + d)) + shift[k + d];
                a[j][d] = ua - std::floor(ua);
                b[j][d] = ub - std::floor(ub);
            }
        }
    } else {
        Rng rng(seed);
        for (int j = 0; j < n; ++j)
            for (int d = 0; d < k; ++d) a[j][d] = uniform01(rng);
        for (int j = 0; j < n; ++j)
            for (int d = 0; d < k; ++d) b[j][d] = uniform01(rng);
    }

    Design design;
    design.kind = DesignKind::Saltelli;
    design.names = space_names(space);
    design.saltelli_base = n;
    design.rows.reserve(static_cast<std::size_t>(n) * (k + 2));

    auto push_scaled = [&](const std::vector<double>& unit_row) {
        std::vector<double> row(k);
        for (int d = 0; d < k; ++d) row[d] = scale_unit(space.at(d), unit_row[d]);
        design.rows.push_back(std::move(row));
    };

    for (int j = 0; j < n; ++j) push_scaled(a[j]);
    for (int j = 0; j < n; ++j) push_scaled(b[j]);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<double> unit_row = a[j];
            unit_row[i] = b[j][i];
            push_scaled(unit_row);
        }
    return design;
}

Design grid_design(const std::vector<GridAxis>& axes) {
    if (axes.empty()) throw std::invalid_argument("grid_design: no axes");
    std::size_t total = 1;
    for (const GridAxis& axis : axes) {
        if (axis.values.empty())
            throw std::invalid_argument("grid_design: empty axis " + axis.name);
        total *= axis.values.size();
    }

    Design design;
    design.kind = DesignKind::Grid;
    for (const GridAxis& axis : axes) design.names.push_back(axis.name);
    design.rows.reserve(total);

    const int k = static_cast<int>(axes.size());
    std::vector<std::size_t> pos(k, 0);
    for (std::size_t r = 0; r < total; ++r) {
        std::vector<double> row(k);
        for (int d = 0; d < k; ++d) row[d] = axes[d].values[pos[d]];
        design.rows.push_back(std::move(row));
        for (int d = k - 1; d >= 0; --d) {  // row-major: last axis fastest
            if (++pos[d] < axes[d].values.size()) break;
            pos[d] = 0;
        }
    }
    return design;
}

void write_design_csv(const Design& design, std::ostream& out) {
    write_csv_header(out, design.names);
    for (const auto& row : design.rows) write_csv_numeric_row(out, row);
}

}  // namespace innosim
