#pragma once

#include <functional>
#include <variant>
#include <vector>

#include "wigner/closed_forms.hpp"
#include "wigner/grid.hpp"

namespace wigner::liouville {

struct ConstantDrive {
    double lambda;
    bool operator==(const ConstantDrive&) const = default;
};

// Q(t) = lambda + b cos(Omega t)
struct CosineDrive {
    double lambda;
    double b;
    double Omega;
    bool operator==(const CosineDrive&) const = default;
};

// Piecewise-linear Q through (times, values); end values are held outside the table.
struct TabulatedDrive {
    TabulatedDrive(std::vector<double> times, std::vector<double> values);

    std::vector<double> times;
    std::vector<double> values;
    bool operator==(const TabulatedDrive&) const = default;
};

using DrivePolicy = std::variant<ConstantDrive, CosineDrive, TabulatedDrive>;

double drive_value(const DrivePolicy& drive, double t);

// V(x, t) = -gamma x^2 - Q(t) x. gamma > 0 harmonic, gamma < 0 inverted.
struct OscillatorParams {
    OscillatorParams(double gamma, DrivePolicy drive, double hbar);

    double gamma;
    DrivePolicy drive;
    double hbar;
};

// Backward characteristic X = a1 x + a2 xi + a3, Xi = b1 x + b2 xi + b3.
struct FlowCoefficients {
    double a1, a2, a3;
    double b1, b2, b3;
    double t;

    // a2 b1 - a1 b2, identically -1
    double wronskian() const { return a2 * b1 - a1 * b2; }
};

inline constexpr double kGammaEps = 1e-8;

FlowCoefficients flow_coefficients(const OscillatorParams& params, double t);

struct PhasePoint {
    double x;
    double xi;
};

PhasePoint backward_map(const FlowCoefficients& c, double x, double xi);

// Convolutions of the drive with the fundamental solutions,
//   position = int_0^t Q(s) S(t - s) ds,  momentum = int_0^t Q(s) C(t - s) ds,
// with C = cos(2 sqrt(gamma) t), S = sin(2 sqrt(gamma) t)/sqrt(gamma). Closed form for constant and
// cosine drives. Both stay O(|S|) where a3, b3 combinations cancel at O(S^2).
struct DriveResponse {
    double position;
    double momentum;
};

DriveResponse drive_response(const OscillatorParams& params, double t);

using PhaseSpaceFunction = std::function<double(double, double)>;

PhaseSpaceFunction analytic_initial(const closed_forms::AnalyticState& state);
// Bilinear interpolation of a gridded field, zero outside the grid.
PhaseSpaceFunction interpolated(const WignerField& field);

// W(x, xi, t) = W0(X, Xi) sampled on grid.
WignerField propagate_field(const PhaseSpaceFunction& initial, const OscillatorParams& params, double t,
                            const PhaseSpaceGrid& grid);

// Characteristics q' = -2p, p' = 2 gamma q + Q(t) from (x, xi), by quadrature of the
// convolution integrals against Q.
PhasePoint classical_flow(const OscillatorParams& params, double x, double xi, double t);

// max over grid nodes of |W_t + 2 xi W_x - (2 gamma x + Q) W_xi|, all derivatives central.
double liouville_residual(const PhaseSpaceFunction& initial, const OscillatorParams& params, double t,
                          const PhaseSpaceGrid& grid, double dt, double dx, double dxi);

struct ResidualPair {
    double energy;     // |E W - H W| of the energy equation
    double stationary; // |dW/dt| of the transport equation
};

// Stationary pair for V = omega^2 x^2 on a HarmonicEigen state, central differences.
ResidualPair stationary_residual(const closed_forms::AnalyticState& state, double energy, PhasePoint point,
                                 double dx, double dxi);

// Stationary pair for the delta potential on the closed-form bound state, xi' integral truncated
// at +-xi_cutoff with the leading 1/xi'^2 tail added back analytically.
ResidualPair delta_stationary_residual(double gamma, double hbar, PhasePoint point, double xi_cutoff, double dx);

}  // namespace wigner::liouville
