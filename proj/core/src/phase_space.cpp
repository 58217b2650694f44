#include "wigner/phase_space.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "wigner/errors.hpp"
#include "wigner/spectral.hpp"

namespace wigner {

namespace {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;

void check_boundary_decay(const WaveSample& wave) {
    double peak = 0.0;
    for (const auto& v : wave.values) {
        peak = std::max(peak, std::abs(v));
    }
    const double edge = std::max(std::abs(wave.values.front()), std::abs(wave.values.back()));
    if (edge > Tolerances::decay * peak) {
        throw DomainError("wavefunction does not decay at the grid boundary: edge/max = " +
                          std::to_string(edge / peak));
    }
}

void check_transform_inputs(const WaveSample& wave, const PhaseSpaceGrid& grid) {
    if (!wave.grid.matches(grid.x())) {
        throw ConfigurationError("wave grid differs from the phase-space x grid");
    }
    check_boundary_decay(wave);
}

// Correlation c_j = psi_{k+j} conj(psi_{k-j}), j = -(n-1)..(n-1), stored at j + n - 1.
void fill_correlation(const WaveSample& wave, std::size_t k, std::vector<cplx>& c) {
    const std::size_t n = wave.values.size();
    std::fill(c.begin(), c.end(), cplx{0.0, 0.0});
    const std::size_t reach = std::min(k, n - 1 - k);
    for (std::size_t j = 0; j <= reach; ++j) {
        c[n - 1 + j] = wave.values[k + j] * std::conj(wave.values[k - j]);
        c[n - 1 - j] = wave.values[k - j] * std::conj(wave.values[k + j]);
    }
}

double imaginary_allowance(const WaveSample& wave) {
    return Tolerances::imaginary * std::max(1.0, wave.norm_squared() / (kPi * wave.hbar));
}

void require_same_layout(const WignerField& a, const WignerField& b) {
    if (!(a.grid.x().matches(b.grid.x()) && a.grid.xi().matches(b.grid.xi()))) {
        throw ConfigurationError("fields live on different phase-space grids");
    }
    if (std::abs(a.hbar - b.hbar) > 1e-14 * a.hbar) {
        throw ConfigurationError("fields carry different hbar");
    }
}

// int exp(i xi y) W(x_row, xi) dxi by the rectangle rule.
cplx row_fourier(const WignerField& f, const double* row, double y) {
    const Grid1D& xi = f.grid.xi();
    cplx s = 0.0;
    for (std::size_t m = 0; m < xi.count(); ++m) {
        s += row[m] * spectral::unit_phase(static_cast<long double>(xi.node(m)) * y);
    }
    return s * xi.step();
}

}  // namespace

WignerField wigner_transform(const WaveSample& wave, const PhaseSpaceGrid& grid) {
    check_transform_inputs(wave, grid);
    const std::size_t n = wave.values.size();
    const std::size_t nxi = grid.xi().count();
    const double dy = 2.0 * wave.grid.step() / wave.hbar;
    const std::size_t ny = 2 * n - 1;
    const spectral::ChirpZ czt(ny, -static_cast<double>(n - 1) * dy, dy, nxi, grid.xi().x_min(), grid.xi().step());

    WignerField field(grid, wave.hbar);
    const double weight = dy / (2.0 * kPi);
    const double allowance = imaginary_allowance(wave);
    std::vector<cplx> c(ny);
    std::vector<cplx> out(nxi);
    for (std::size_t k = 0; k < n; ++k) {
        fill_correlation(wave, k, c);
        czt.apply(c, out);
        for (std::size_t m = 0; m < nxi; ++m) {
            const cplx w = weight * out[m];
            if (std::abs(w.imag()) > allowance) {
                throw NumericalError("transform imaginary residue " + std::to_string(w.imag()) + " exceeds tolerance");
            }
            field.at(k, m) = w.real();
        }
    }
    return field;
}

WignerField wigner_transform_direct(const WaveSample& wave, const PhaseSpaceGrid& grid) {
    check_transform_inputs(wave, grid);
    const std::size_t n = wave.values.size();
    const std::size_t nxi = grid.xi().count();
    const double dy = 2.0 * wave.grid.step() / wave.hbar;
    WignerField field(grid, wave.hbar);
    std::vector<cplx> c(2 * n - 1);
    for (std::size_t k = 0; k < n; ++k) {
        fill_correlation(wave, k, c);
        for (std::size_t m = 0; m < nxi; ++m) {
            const double xi = grid.xi().node(m);
            cplx s = 0.0;
            for (std::size_t idx = 0; idx < c.size(); ++idx) {
                const double y = (static_cast<double>(idx) - static_cast<double>(n - 1)) * dy;
                s += c[idx] * std::exp(cplx(0.0, -xi * y));
            }
            field.at(k, m) = (dy / (2.0 * kPi) * s).real();
        }
    }
    return field;
}

std::vector<double> position_marginal(const WignerField& field) {
    const std::size_t nx = field.grid.x().count();
    const std::size_t nxi = field.grid.xi().count();
    std::vector<double> out(nx, 0.0);
    for (std::size_t k = 0; k < nx; ++k) {
        double s = 0.0;
        for (std::size_t m = 0; m < nxi; ++m) {
            s += field.at(k, m);
        }
        out[k] = s * field.grid.xi().step();
    }
    return out;
}

std::vector<double> momentum_marginal(const WignerField& field) {
    const std::size_t nx = field.grid.x().count();
    const std::size_t nxi = field.grid.xi().count();
    std::vector<double> out(nxi, 0.0);
    for (std::size_t k = 0; k < nx; ++k) {
        for (std::size_t m = 0; m < nxi; ++m) {
            out[m] += field.at(k, m);
        }
    }
    for (double& v : out) {
        v *= field.grid.x().step();
    }
    return out;
}

double total_mass(const WignerField& field) {
    double s = 0.0;
    for (double v : field.values) {
        s += v;
    }
    return s * field.grid.x().step() * field.grid.xi().step();
}

double overlap_identity(const WignerField& w1, const WignerField& w2) {
    require_same_layout(w1, w2);
    double s = 0.0;
    for (std::size_t i = 0; i < w1.values.size(); ++i) {
        s += w1.values[i] * w2.values[i];
    }
    return 2.0 * kPi * w1.hbar * s * w1.grid.x().step() * w1.grid.xi().step();
}

InversionResult invert_wigner(const WignerField& field, std::optional<double> x_star) {
    const Grid1D& xg = field.grid.x();
    const std::size_t n = xg.count();
    const std::size_t nxi = field.grid.xi().count();
    const std::vector<double> marg = position_marginal(field);

    std::size_t s = 0;
    if (x_star) {
        const double pos = (*x_star - xg.x_min()) / xg.step();
        if (pos < -0.5 || pos > static_cast<double>(n) - 0.5) {
            throw NotInvertibleError("x_star lies outside the grid");
        }
        s = static_cast<std::size_t>(std::lround(std::clamp(pos, 0.0, static_cast<double>(n - 1))));
    } else {
        s = static_cast<std::size_t>(std::max_element(marg.begin(), marg.end()) - marg.begin());
    }
    if (!(marg[s] >= Tolerances::inversion_floor)) {
        throw NotInvertibleError("position marginal at x_star is below the inversion floor");
    }

    // Rows at integer nodes only couple samples of equal index parity. The second sublattice is
    // anchored at a neighbour whose phase comes from the band-limited interpolant at the half node.
    std::size_t s2 = (s + 1 < n) ? s + 1 : s - 1;
    if (s > 0 && s + 1 < n && marg[s - 1] > marg[s + 1]) {
        s2 = s - 1;
    }
    if (!(marg[s2] >= Tolerances::inversion_floor)) {
        throw NotInvertibleError("position marginal next to x_star is below the inversion floor");
    }

    const double half = 0.5 * (static_cast<double>(s) + static_cast<double>(s2));
    std::vector<double> half_row(nxi, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        const double d = half - static_cast<double>(k);
        const double sign = (static_cast<long long>(std::floor(d)) % 2 == 0) ? 1.0 : -1.0;
        const double wgt = sign / (kPi * d);
        for (std::size_t m = 0; m < nxi; ++m) {
            half_row[m] += wgt * field.at(k, m);
        }
    }
    const cplx cross = row_fourier(field, half_row.data(), (xg.node(s2) - xg.node(s)) / field.hbar);
    if (std::abs(cross) < Tolerances::inversion_floor * std::sqrt(marg[s] * marg[s2])) {
        throw NotInvertibleError("cannot fix the relative phase of the two sublattices");
    }

    const cplx anchor1 = std::sqrt(marg[s]);
    const cplx anchor2 = std::sqrt(marg[s2]) * cross / std::abs(cross);

    std::vector<cplx> psi(n);
    for (std::size_t k = 0; k < n; ++k) {
        const bool first = ((k + s) % 2) == 0;
        const std::size_t a = first ? s : s2;
        const cplx anchor = first ? anchor1 : anchor2;
        const std::size_t row = (k + a) / 2;
        const cplx prod = row_fourier(field, &field.values[row * nxi], (xg.node(k) - xg.node(a)) / field.hbar);
        psi[k] = prod / std::conj(anchor);
    }
    return InversionResult{WaveSample(xg, std::move(psi), field.hbar), xg.node(s), s};
}

ContinuityReport continuity_gap(const WignerField& w1, const WignerField& w2, const WaveSample& phi1,
                                const WaveSample& phi2) {
    require_same_layout(w1, w2);
    if (!phi1.grid.matches(w1.grid.x()) || !phi2.grid.matches(w1.grid.x())) {
        throw ConfigurationError("wave samples must share the field x grid");
    }
    const double cell = w1.grid.x().step() * w1.grid.xi().step();
    double l2 = 0.0;
    double sup = 0.0;
    for (std::size_t i = 0; i < w1.values.size(); ++i) {
        const double d = w1.values[i] - w2.values[i];
        l2 += d * d;
        sup = std::max(sup, std::abs(d));
    }
    l2 = std::sqrt(l2 * cell);

    const double theta = std::arg(inner_product(phi1, phi2));
    const cplx rot = std::polar(1.0, theta);
    double dist = 0.0;
    for (std::size_t k = 0; k < phi1.values.size(); ++k) {
        dist += std::norm(rot * phi1.values[k] - phi2.values[k]);
    }
    dist = std::sqrt(dist * phi1.grid.step());
    const double norms = std::sqrt(phi1.norm_squared()) + std::sqrt(phi2.norm_squared());
    const double hbar = w1.hbar;
    return ContinuityReport{l2, sup, std::sqrt(2.0 / hbar) * norms * dist, norms * dist / (kPi * hbar), theta};
}

PurityReport purity_separability_check(const WignerField& field, std::size_t sample_nodes) {
    const Grid1D& xg = field.grid.x();
    const std::size_t nxi = field.grid.xi().count();
    const std::vector<double> marg = position_marginal(field);
    double peak = 0.0;
    for (double v : marg) {
        peak = std::max(peak, std::abs(v));
    }
    // even-index nodes on the support: every midpoint (a + b)/2 is then a node
    std::vector<std::size_t> support;
    for (std::size_t k = 0; k < xg.count(); k += 2) {
        if (std::abs(marg[k]) >= 1e-6 * peak) {
            support.push_back(k);
        }
    }
    std::vector<std::size_t> nodes;
    const std::size_t want = std::max<std::size_t>(2, sample_nodes);
    if (support.size() <= want) {
        nodes = support;
    } else {
        for (std::size_t i = 0; i < want; ++i) {
            nodes.push_back(support[i * (support.size() - 1) / (want - 1)]);
        }
    }
    const std::size_t sn = nodes.size();
    if (sn < 2) {
        return PurityReport{0.0, true};
    }
    std::vector<cplx> q(sn * sn);
    double qmax = 0.0;
    for (std::size_t i = 0; i < sn; ++i) {
        for (std::size_t j = 0; j < sn; ++j) {
            const std::size_t row = (nodes[i] + nodes[j]) / 2;
            q[i * sn + j] = row_fourier(field, &field.values[row * nxi], (xg.node(nodes[i]) - xg.node(nodes[j])) / field.hbar);
            qmax = std::max(qmax, std::abs(q[i * sn + j]));
        }
    }
    if (qmax < Tolerances::inversion_floor) {
        return PurityReport{0.0, true};
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < sn; ++i) {
        for (std::size_t i2 = i + 1; i2 < sn; ++i2) {
            for (std::size_t j = 0; j < sn; ++j) {
                for (std::size_t j2 = j + 1; j2 < sn; ++j2) {
                    const cplx minor = q[i * sn + j] * q[i2 * sn + j2] - q[i * sn + j2] * q[i2 * sn + j];
                    worst = std::max(worst, std::abs(minor));
                }
            }
        }
    }
    return PurityReport{worst / (qmax * qmax), false};
}

}  // namespace wigner
