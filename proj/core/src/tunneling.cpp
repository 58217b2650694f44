#include "wigner/tunneling.hpp"

#include <cmath>

#include "wigner/errors.hpp"
#include "wigner/special.hpp"

namespace wigner::tunneling {

namespace {

struct DriveTerms {
    double lambda;
    double b;
    double Omega;
};

DriveTerms drive_terms(const liouville::DrivePolicy& drive) {
    if (const auto* c = std::get_if<liouville::ConstantDrive>(&drive)) {
        return {c->lambda, 0.0, 0.0};
    }
    if (const auto* c = std::get_if<liouville::CosineDrive>(&drive)) {
        return {c->lambda, c->b, c->Omega};
    }
    throw UnsupportedError("asymptotic tunnelling formulas need a constant or cosine drive");
}

// Limit of v / sqrt(hbar A) as t -> infinity.
double asymptotic_argument(const TunnelScenario& s) {
    const DriveTerms d = drive_terms(s.drive);
    const double w = s.omega;
    const double den = d.Omega * d.Omega + 4.0 * w * w;
    const double num = -d.lambda / (2.0 * w) + s.packet.a * w + s.packet.p0 - 2.0 * d.b * w / den;
    return num / (std::sqrt(s.packet.hbar) * std::sqrt(1.0 + w * w));
}

}  // namespace

TunnelScenario::TunnelScenario(gaussian::GaussianPacket p, double w, liouville::DrivePolicy d)
    : packet(p), omega(w), drive(std::move(d)) {
    if (!(omega > 0.0)) {
        throw ConfigurationError("omega must be positive");
    }
    if (!(packet.hbar > 0.0)) {
        throw ConfigurationError("hbar must be positive");
    }
}

liouville::OscillatorParams TunnelScenario::oscillator() const {
    return liouville::OscillatorParams(-omega * omega, drive, packet.hbar);
}

bool TunnelScenario::driven() const {
    if (const auto* c = std::get_if<liouville::ConstantDrive>(&drive)) {
        return c->lambda != 0.0;
    }
    return true;
}

std::string to_string(Regime r) {
    switch (r) {
        case Regime::Subcritical:
            return "subcritical";
        case Regime::Critical:
            return "critical";
        case Regime::Supercritical:
            return "supercritical";
    }
    return "unknown";
}

double survival_probability(const TunnelScenario& s, double t) {
    const gaussian::PacketShape shape = gaussian::packet_shape(s.packet, s.oscillator(), t);
    return 0.5 * special::erfc(shape.v / std::sqrt(s.packet.hbar * shape.A));
}

double asymptotic_probability(const TunnelScenario& s) { return 0.5 * special::erfc(asymptotic_argument(s)); }

double critical_momentum(const TunnelScenario& s) {
    const DriveTerms d = drive_terms(s.drive);
    const double w = s.omega;
    const double den = d.Omega * d.Omega + 4.0 * w * w;
    return d.lambda / (2.0 * w) + 2.0 * d.b * w / den - s.packet.a * w;
}

Energies energies(const TunnelScenario& s) {
    if (s.driven()) {
        throw UnsupportedError("energies are defined for the undriven scenario only");
    }
    const double w2 = s.omega * s.omega;
    const double p0 = s.packet.p0;
    const double a = s.packet.a;
    const double classical = p0 * p0 - w2 * a * a;
    return {0.5 * (1.0 - w2) * s.packet.hbar + classical, classical};
}

Regime classify_regime(const TunnelScenario& s) {
    const double gap = s.packet.p0 - critical_momentum(s);
    if (std::abs(gap) <= kReportTol) {
        return Regime::Critical;
    }
    return gap < 0.0 ? Regime::Subcritical : Regime::Supercritical;
}

TunnelReport report(const TunnelScenario& s) {
    TunnelReport r{critical_momentum(s), asymptotic_probability(s), classify_regime(s), std::nan(""), std::nan("")};
    if (!s.driven()) {
        const Energies e = energies(s);
        r.E_q = e.quantum;
        r.E_c = e.classical;
    }
    return r;
}

double large_time(double omega) { return std::max(15.0 / (2.0 * omega), 10.0); }

Figure1Series figure1_series(double a, double omega, double hbar, const std::vector<double>& p0_list,
                             const std::vector<double>& t_grid) {
    Figure1Series out{p0_list, t_grid, {}};
    for (double p0 : p0_list) {
        const TunnelScenario s({a, p0, hbar}, omega, liouville::ConstantDrive{0.0});
        std::vector<double> row;
        row.reserve(t_grid.size());
        for (double t : t_grid) {
            row.push_back(survival_probability(s, t));
        }
        out.P.push_back(std::move(row));
    }
    return out;
}

}  // namespace wigner::tunneling
