#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace wigner {

// Uniform lattice x_k = x_min + k * step, k = 0..count-1.
class Grid1D {
public:
    Grid1D(double x_min, double step, std::size_t count);

    // count nodes with both end points included.
    static Grid1D spanning(double lo, double hi, std::size_t count);
    // count nodes placed symmetrically about 0 with outermost nodes at +-half_width.
    static Grid1D symmetric(double half_width, std::size_t count);

    double x_min() const { return x_min_; }
    double step() const { return step_; }
    std::size_t count() const { return count_; }
    double x_max() const { return x_min_ + static_cast<double>(count_ - 1) * step_; }
    double node(std::size_t k) const { return x_min_ + static_cast<double>(k) * step_; }
    std::vector<double> nodes() const;

    // Equal up to a relative 1e-12 on origin and step.
    bool matches(const Grid1D& other) const;
    bool operator==(const Grid1D&) const = default;

private:
    double x_min_;
    double step_;
    std::size_t count_;
};

// Sampled wavefunction; values[k] belongs to grid.node(k).
struct WaveSample {
    WaveSample(Grid1D grid, std::vector<std::complex<double>> values, double hbar);

    Grid1D grid;
    std::vector<std::complex<double>> values;
    double hbar;

    // Rectangle-rule squared norm.
    double norm_squared() const;
};

// Rectangle-rule inner product <a, b> = sum conj(a) b dx.
std::complex<double> inner_product(const WaveSample& a, const WaveSample& b);

// xi grid must be symmetric about 0.
class PhaseSpaceGrid {
public:
    PhaseSpaceGrid(Grid1D x_grid, Grid1D xi_grid);

    // xi lattice covering one full period of the discrete transform on x_grid:
    // count 2 * x_count, step pi * hbar / (count * x_step). Marginal identities are exact on it.
    static PhaseSpaceGrid natural(const Grid1D& x_grid, double hbar);

    const Grid1D& x() const { return x_; }
    const Grid1D& xi() const { return xi_; }
    bool operator==(const PhaseSpaceGrid&) const = default;

private:
    Grid1D x_;
    Grid1D xi_;
};

// Real field sampled row-major: values[ix * xi_count + ixi].
struct WignerField {
    WignerField(PhaseSpaceGrid grid, std::vector<double> values, double hbar);
    WignerField(PhaseSpaceGrid grid, double hbar);

    PhaseSpaceGrid grid;
    std::vector<double> values;
    double hbar;

    double& at(std::size_t ix, std::size_t ixi) { return values[ix * grid.xi().count() + ixi]; }
    double at(std::size_t ix, std::size_t ixi) const { return values[ix * grid.xi().count() + ixi]; }
    double max_abs() const;
};

}  // namespace wigner
