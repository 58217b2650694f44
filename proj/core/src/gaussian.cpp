#include "wigner/gaussian.hpp"

#include <cmath>
#include <numbers>

#include "wigner/errors.hpp"

namespace wigner::gaussian {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

PacketShape packet_shape(const GaussianPacket& p, const liouville::OscillatorParams& params, double t) {
    const liouville::FlowCoefficients f = liouville::flow_coefficients(params, t);
    if (!(p.hbar > 0.0)) {
        throw ConfigurationError("hbar must be positive");
    }
    const double da = f.a3 - p.a;
    const double db = f.b3 - p.p0;
    PacketShape s{};
    s.A = f.a2 * f.a2 + f.b2 * f.b2;
    s.Bc0 = 2.0 * (f.a2 * da + f.b2 * db);
    s.Bc1 = 2.0 * (f.a2 * f.a1 + f.b2 * f.b1);
    s.Cc0 = da * da + db * db;
    s.Cc1 = 2.0 * (f.a1 * da + f.b1 * db);
    s.Cc2 = f.a1 * f.a1 + f.b1 * f.b1;
    s.v = p.a * f.a1 - p.p0 * f.a2 - liouville::drive_response(params, t).position;
    s.t = f.t;
    return s;
}

double density(const PacketShape& s, double hbar, double x) {
    const double d = x - s.v;
    return std::exp(-d * d / (hbar * s.A)) / std::sqrt(kPi * hbar * s.A);
}

std::complex<double> wavefunction(const PacketShape& s, double hbar, double x) {
    const double d = x - s.v;
    const double amp = std::pow(kPi * hbar * s.A, -0.25) * std::exp(-d * d / (2.0 * hbar * s.A));
    const double phase = -s.B(0.5 * x) * x / (2.0 * hbar * s.A);
    return std::polar(amp, phase);
}

double wigner_evolved(const PacketShape& s, double hbar, double x, double xi) {
    return std::exp(-(s.A * xi * xi + s.B(x) * xi + s.C(x)) / hbar) / (kPi * hbar);
}

double expectation_position(const PacketShape& s) { return s.v; }

}  // namespace wigner::gaussian
