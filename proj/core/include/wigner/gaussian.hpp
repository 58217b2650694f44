#pragma once

#include <complex>

#include "wigner/liouville.hpp"

namespace wigner::gaussian {

// psi0 = (pi hbar)^(-1/4) exp(-(x - a)^2 / (2 hbar)) exp(i p0 x / hbar)
struct GaussianPacket {
    double a;
    double p0;
    double hbar;
};

// Evolved field W = exp(-(A xi^2 + B(x) xi + C(x)) / hbar) / (pi hbar) with
// B(x) = Bc0 + Bc1 x and C(x) = Cc0 + Cc1 x + Cc2 x^2; 4 Cc2 A - Bc1^2 = 4.
struct PacketShape {
    double A;
    double Bc0, Bc1;
    double Cc0, Cc1, Cc2;
    double v;
    double t;

    double B(double x) const { return Bc0 + Bc1 * x; }
    double C(double x) const { return Cc0 + Cc1 * x + Cc2 * x * x; }
};

// v is evaluated as a C + p0 S - int_0^t Q(s) S(t - s) ds, equal to -b2 (a3 - a) + a2 (b3 - p0)
// but free of the O(S^2) cancellation in the inverted oscillator.
PacketShape packet_shape(const GaussianPacket& packet, const liouville::OscillatorParams& params, double t);

// |psi(x, t)|^2 = exp(-(x - v)^2 / (hbar A)) / sqrt(pi hbar A)
double density(const PacketShape& shape, double hbar, double x);
// Reconstructed wavefunction with theta* = 0.
std::complex<double> wavefunction(const PacketShape& shape, double hbar, double x);
double wigner_evolved(const PacketShape& shape, double hbar, double x, double xi);
double expectation_position(const PacketShape& shape);

}  // namespace wigner::gaussian
