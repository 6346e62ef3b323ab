#ifndef INNOSIM_DESIGN_HPP
#define INNOSIM_DESIGN_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace innosim {

enum class AxisScale { Linear, Log10 };

struct ParamDim {
    std::string name;
    double lower = 0.0;
    double upper = 1.0;
    AxisScale scale = AxisScale::Linear;
};

struct ParamSpace {
    std::vector<ParamDim> dims;

    int size() const { return static_cast<int>(dims.size()); }
    const ParamDim& at(int i) const { return dims[i]; }
    int index_of(const std::string& name) const;  // -1 when absent
    void validate() const;
};

// The default free-parameter box explored by the experiments; optionally with
// a synthetic unit-interval "seed" dimension (hashed to the run seed) so the
// sensitivity analysis can treat stochasticity as one more input column.
ParamSpace default_free_space();
ParamSpace default_gsa_space();

enum class DesignKind { Lhs, Saltelli, Grid };

struct Design {
    DesignKind kind = DesignKind::Lhs;
    std::vector<std::string> names;
    std::vector<std::vector<double>> rows;

    // Saltelli block arithmetic: rows laid out as [A; B; A_B^(1); ...; A_B^(k)]
    int saltelli_base = 0;

    int n_rows() const { return static_cast<int>(rows.size()); }
    int n_cols() const { return static_cast<int>(names.size()); }
    int a_row(int j) const { return j; }
    int b_row(int j) const { return saltelli_base + j; }
    int abi_row(int i, int j) const { return (2 + i) * saltelli_base + j; }
};

// Latin Hypercube: one sample per equal-width stratum in every dimension,
// strata independently permuted across dimensions.
Design lhs_sample(const ParamSpace& space, int n, std::uint64_t seed);

enum class BaseSampling { QuasiRandom, PseudoRandom };

// Saltelli design of N*(k+2) rows from two base matrices A and B plus the k
// radial matrices A_B^(i) (column i of A replaced by column i of B). The
// quasi-random base uses a Halton sequence in 2k dimensions with a seeded
// Cranley-Patterson rotation; the pseudo-random base draws seeded uniforms.
Design saltelli_design(const ParamSpace& space, int n_base, std::uint64_t seed,
                       BaseSampling sampling = BaseSampling::QuasiRandom);

struct GridAxis {
    std::string name;
    std::vector<double> values;
};

// Full Cartesian product in row-major order over the axes as listed.
Design grid_design(const std::vector<GridAxis>& axes);

// Van der Corput radical inverse in the given base; Halton dimension d uses
// the d-th prime as base.
double radical_inverse(std::uint64_t index, std::uint32_t base);
std::uint32_t halton_base(int dimension);

void write_design_csv(const Design& design, std::ostream& out);

}  // namespace innosim

#endif
