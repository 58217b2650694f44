#include "wigner/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "wigner/errors.hpp"

namespace wigner {

namespace {

bool close_rel(double a, double b, double scale) {
    return std::abs(a - b) <= 1e-12 * std::max({std::abs(a), std::abs(b), scale});
}

void require_hbar(double hbar) {
    if (!(hbar > 0.0) || !std::isfinite(hbar)) {
        throw ConfigurationError("hbar must be positive and finite");
    }
}

}  // namespace

Grid1D::Grid1D(double x_min, double step, std::size_t count) : x_min_(x_min), step_(step), count_(count) {
    if (count < 2) {
        throw ConfigurationError("grid needs at least 2 nodes");
    }
    if (!(step > 0.0) || !std::isfinite(step) || !std::isfinite(x_min)) {
        throw ConfigurationError("grid step must be positive and finite");
    }
}

Grid1D Grid1D::spanning(double lo, double hi, std::size_t count) {
    if (count < 2 || !(hi > lo)) {
        throw ConfigurationError("spanning grid needs hi > lo and at least 2 nodes");
    }
    return Grid1D(lo, (hi - lo) / static_cast<double>(count - 1), count);
}

Grid1D Grid1D::symmetric(double half_width, std::size_t count) {
    return spanning(-half_width, half_width, count);
}

std::vector<double> Grid1D::nodes() const {
    std::vector<double> out(count_);
    for (std::size_t k = 0; k < count_; ++k) {
        out[k] = node(k);
    }
    return out;
}

bool Grid1D::matches(const Grid1D& other) const {
    const double scale = std::max(std::abs(x_max()), std::abs(x_min_)) + step_;
    return count_ == other.count_ && close_rel(step_, other.step_, 0.0) && close_rel(x_min_, other.x_min_, scale);
}

WaveSample::WaveSample(Grid1D g, std::vector<std::complex<double>> v, double h)
    : grid(g), values(std::move(v)), hbar(h) {
    require_hbar(hbar);
    if (values.size() != grid.count()) {
        throw ConfigurationError("wave sample length " + std::to_string(values.size()) + " differs from grid count " +
                                 std::to_string(grid.count()));
    }
}

double WaveSample::norm_squared() const {
    double s = 0.0;
    for (const auto& v : values) {
        s += std::norm(v);
    }
    return s * grid.step();
}

std::complex<double> inner_product(const WaveSample& a, const WaveSample& b) {
    if (!a.grid.matches(b.grid)) {
        throw ConfigurationError("inner product of samples on different grids");
    }
    std::complex<double> s = 0.0;
    for (std::size_t k = 0; k < a.values.size(); ++k) {
        s += std::conj(a.values[k]) * b.values[k];
    }
    return s * a.grid.step();
}

PhaseSpaceGrid::PhaseSpaceGrid(Grid1D x_grid, Grid1D xi_grid) : x_(x_grid), xi_(xi_grid) {
    const double centre = xi_.x_min() + 0.5 * static_cast<double>(xi_.count() - 1) * xi_.step();
    if (std::abs(centre) > 1e-9 * xi_.step()) {
        throw ConfigurationError("xi grid must be symmetric about 0");
    }
}

PhaseSpaceGrid PhaseSpaceGrid::natural(const Grid1D& x_grid, double hbar) {
    require_hbar(hbar);
    const std::size_t m = 2 * x_grid.count();
    const double dxi = std::numbers::pi * hbar / (static_cast<double>(m) * x_grid.step());
    const double xi_min = -0.5 * static_cast<double>(m - 1) * dxi;
    return PhaseSpaceGrid(x_grid, Grid1D(xi_min, dxi, m));
}

WignerField::WignerField(PhaseSpaceGrid g, std::vector<double> v, double h) : grid(g), values(std::move(v)), hbar(h) {
    require_hbar(hbar);
    if (values.size() != grid.x().count() * grid.xi().count()) {
        throw ConfigurationError("field size does not match grid");
    }
}

WignerField::WignerField(PhaseSpaceGrid g, double h)
    : WignerField(g, std::vector<double>(g.x().count() * g.xi().count(), 0.0), h) {}

double WignerField::max_abs() const {
    double m = 0.0;
    for (double v : values) {
        m = std::max(m, std::abs(v));
    }
    return m;
}

}  // namespace wigner
