#pragma once

#include <string>
#include <vector>

#include "wigner/gaussian.hpp"
#include "wigner/liouville.hpp"

namespace wigner::tunneling {

// Packet in V = -omega^2 x^2 - Q(t) x; drive is ConstantDrive or CosineDrive.
struct TunnelScenario {
    TunnelScenario(gaussian::GaussianPacket packet, double omega, liouville::DrivePolicy drive);

    gaussian::GaussianPacket packet;
    double omega;
    liouville::DrivePolicy drive;

    liouville::OscillatorParams oscillator() const;
    bool driven() const;
};

enum class Regime { Subcritical, Critical, Supercritical };

std::string to_string(Regime r);

inline constexpr double kReportTol = 1e-12;

// Probability of remaining at x < 0: (1 - erf(v / sqrt(hbar A))) / 2.
double survival_probability(const TunnelScenario& scenario, double t);
double asymptotic_probability(const TunnelScenario& scenario);
// Initial momentum with asymptotic probability exactly 1/2.
double critical_momentum(const TunnelScenario& scenario);

struct Energies {
    double quantum;
    double classical;
};

// Undriven only.
Energies energies(const TunnelScenario& scenario);
Regime classify_regime(const TunnelScenario& scenario);

struct TunnelReport {
    double p_crit;
    double P_inf;
    Regime regime;
    double E_q;
    double E_c;
};

TunnelReport report(const TunnelScenario& scenario);

// max(15/(2 omega), 10): survival curves have settled to ~e^{-15}.
double large_time(double omega);

struct Figure1Series {
    std::vector<double> p0;
    std::vector<double> t;
    std::vector<std::vector<double>> P;  // P[i][k] for p0[i], t[k]
};

Figure1Series figure1_series(double a, double omega, double hbar, const std::vector<double>& p0_list,
                             const std::vector<double>& t_grid);

}  // namespace wigner::tunneling
