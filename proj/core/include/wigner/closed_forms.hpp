#pragma once

#include <complex>
#include <variant>

#include "wigner/grid.hpp"

namespace wigner::closed_forms {

// (1/sqrt(2R)) on the closed interval [-R, R].
struct Box {
    double R;
    bool operator==(const Box&) const = default;
};

// exp(-((a1 + i a2) x^2 + (b1 + i b2) x + (c1 + i c2)) / 2), a1 > 0.
struct GaussGeneral {
    double a1, a2, b1, b2, c1, c2;
    bool operator==(const GaussGeneral&) const = default;
};

// (pi hbar)^(-1/4) exp(-(x - a)^2 / (2 hbar)) exp(i p0 x / hbar).
struct CoherentGaussian {
    double a, p0;
    bool operator==(const CoherentGaussian&) const = default;
};

// H_n(x) exp(-x^2/2); independent of hbar.
struct Hermite {
    int n;
    bool normalized = false;
    bool operator==(const Hermite&) const = default;
};

// Free evolution of (2/pi)^(1/4) exp(-x^2) under i hbar psi_t = -hbar^2 psi_xx.
struct FreeEvolvedGaussian {
    double t;
    bool operator==(const FreeEvolvedGaussian&) const = default;
};

// Bound state of -hbar^2 psi'' + gamma delta(x) psi, gamma < 0: sqrt(kappa) exp(-kappa |x|).
struct DeltaBound {
    double gamma;
    bool operator==(const DeltaBound&) const = default;
};

// Soliton A sech(B x), A = sqrt(-nu)/(sqrt(8) hbar), B = -nu/(4 hbar^2), nu < 0.
struct Soliton {
    double nu;
    bool operator==(const Soliton&) const = default;
};

// H_n(alpha x) exp(-alpha^2 x^2 / 2), alpha = sqrt(omega/hbar), for V = omega^2 x^2.
struct HarmonicEigen {
    int n;
    double omega;
    bool normalized = false;
    bool operator==(const HarmonicEigen&) const = default;
};

using StateKind =
    std::variant<Box, GaussGeneral, CoherentGaussian, Hermite, FreeEvolvedGaussian, DeltaBound, Soliton, HarmonicEigen>;

class AnalyticState {
public:
    AnalyticState(StateKind kind, double hbar);

    const StateKind& kind() const { return kind_; }
    double hbar() const { return hbar_; }

private:
    StateKind kind_;
    double hbar_;
};

std::complex<double> eval_state(const AnalyticState& state, double x);
double eval_wigner(const AnalyticState& state, double x, double xi);
// Exact ||psi||^2.
double norm_squared(const AnalyticState& state);
// True exactly for the Gaussian families.
bool hudson_positivity(const AnalyticState& state);

// (2n + 1) omega hbar.
double harmonic_energy(int n, double omega, double hbar);

// int_{-R}^{R} int_{-Xi}^{Xi} |W_box| dxi dx; grows like log Xi.
double box_l1_growth(double R, double hbar, double Xi);

WaveSample sample_state(const AnalyticState& state, const Grid1D& grid);
WignerField sample_wigner(const AnalyticState& state, const PhaseSpaceGrid& grid);

}  // namespace wigner::closed_forms
