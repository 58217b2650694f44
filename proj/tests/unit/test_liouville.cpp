#include <gtest/gtest.h>

#include <array>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/numeric/odeint.hpp>
#include <cmath>
#include <limits>
#include <numbers>

#include "seeded.hpp"
#include "wigner/closed_forms.hpp"
#include "wigner/errors.hpp"
#include "wigner/liouville.hpp"

using namespace wigner;
using namespace wigner::liouville;

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Foot of the characteristic of W_t + 2 xi W_x - (2 gamma x + Q) W_xi = 0 through (x, xi) at time t.
PhasePoint ode_foot(double gamma, const DrivePolicy& drive, double x, double xi, double t) {
    using State = std::array<double, 2>;
    State s = {x, xi};
    auto rhs = [&](const State& y, State& dy, double tau) {
        dy[0] = -2.0 * y[1];
        dy[1] = 2.0 * gamma * y[0] + drive_value(drive, t - tau);
    };
    namespace ode = boost::numeric::odeint;
    ode::bulirsch_stoer<State> stepper(1e-14, 1e-14);
    ode::integrate_adaptive(stepper, rhs, s, 0.0, t, 1e-3);
    return {s[0], s[1]};
}

DrivePolicy random_drive(testkit::Seeded& rng, int kind) {
    switch (kind % 3) {
        case 0: return ConstantDrive{rng.uniform(-1, 1)};
        case 1: return CosineDrive{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(0.1, 3.0)};
        default: {
            std::vector<double> t = {0.0, 0.7, 1.9, 3.0};
            std::vector<double> v = {rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
            return TabulatedDrive(t, v);
        }
    }
}

double rel(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace

TEST(Flow, WronskianHarmonicAndNearZero) {
    testkit::Seeded rng(501);
    for (int k = 0; k < 200; ++k) {
        const double gamma = k % 2 ? rng.uniform(0.0, 25.0) : rng.uniform(-kGammaEps, kGammaEps);
        const OscillatorParams p(gamma, random_drive(rng, k), 1.0);
        const double t = rng.uniform(0.0, 10.0);
        EXPECT_NEAR(flow_coefficients(p, t).wronskian(), -1.0, 1e-10) << gamma << " " << t;
    }
}

TEST(Flow, WronskianInvertedWithinRoundingBound) {
    // a1 = b2 = cosh(2 w t) and a2 b1 = sinh^2(2 w t): each carries relative rounding, so the defect scales
    // with cosh^2. The absolute 1e-10 target is reachable only while cosh(2 w t) stays below ~7e2.
    testkit::Seeded rng(502);
    for (int k = 0; k < 300; ++k) {
        const double omega = rng.uniform(0.05, 3.0);
        const double t = rng.uniform(0.0, 100.0 / omega);
        const OscillatorParams p(-omega * omega, ConstantDrive{0.0}, 1.0);
        const double ch = std::cosh(2.0 * omega * t);
        EXPECT_LE(std::abs(flow_coefficients(p, t).wronskian() + 1.0), 8.0 * kEps * (ch * ch + 1.0))
            << omega << " " << t;
    }
}

TEST(Flow, BranchesAgreeAtTheSeriesThreshold) {
    testkit::Seeded rng(503);
    for (int k = 0; k < 30; ++k) {
        const DrivePolicy d = random_drive(rng, k);
        const double t = rng.uniform(0.1, 10.0);
        for (double sign : {1.0, -1.0}) {
            const auto lo = flow_coefficients({sign * kGammaEps * (1.0 - 1e-9), d, 1.0}, t);
            const auto hi = flow_coefficients({sign * kGammaEps * (1.0 + 1e-9), d, 1.0}, t);
            EXPECT_LT(rel(lo.a1, hi.a1), 1e-12);
            EXPECT_LT(rel(lo.a2, hi.a2), 1e-12);
            EXPECT_LT(rel(lo.b1, hi.b1), 1e-12);
            EXPECT_LT(rel(lo.b2, hi.b2), 1e-12);
            EXPECT_LT(rel(lo.a3, hi.a3), 1e-10);
            EXPECT_LT(rel(lo.b3, hi.b3), 1e-10);
        }
    }
}

TEST(Flow, BackwardMapIsTheCharacteristicFoot) {
    testkit::Seeded rng(504);
    for (int k = 0; k < 45; ++k) {
        double gamma;
        switch (k % 3) {
            case 0: gamma = rng.uniform(0.05, 3.0); break;
            case 1: gamma = -rng.uniform(0.05, 1.0); break;
            default: gamma = rng.uniform(-1e-9, 1e-9); break;
        }
        const DrivePolicy d = random_drive(rng, k / 3);
        const double t = rng.uniform(0.1, 4.0);
        const double x = rng.uniform(-2, 2);
        const double xi = rng.uniform(-2, 2);
        const PhasePoint got = backward_map(flow_coefficients({gamma, d, 1.0}, t), x, xi);
        const PhasePoint want = ode_foot(gamma, d, x, xi, t);
        EXPECT_LT(rel(got.x, want.x), 1e-10) << gamma << " drive " << d.index();
        EXPECT_LT(rel(got.xi, want.xi), 1e-10) << gamma << " drive " << d.index();
    }
}

TEST(Flow, DriveResponseMatchesQuadratureIncludingResonance) {
    using boost::math::quadrature::gauss_kronrod;
    const std::vector<std::pair<double, CosineDrive>> cases = {
        {0.5625, CosineDrive{0.2, 0.7, 1.5}},  // 4 gamma = Omega^2
        {1.3, CosineDrive{-0.4, 0.3, 0.8}},
        {-2.3, CosineDrive{0.1, -0.9, 2.2}},
        {0.0, CosineDrive{0.5, 0.5, 1.0}},
        {3e-9, CosineDrive{0.5, 0.5, 0.0}},
    };
    for (const auto& [gamma, d] : cases) {
        const double t = 2.7;
        const double w = std::sqrt(std::abs(gamma));
        auto S = [&](double s) {
            if (gamma > 0) return std::sin(2 * w * s) / w;
            if (gamma < 0) return std::sinh(2 * w * s) / w;
            return 2.0 * s;
        };
        auto C = [&](double s) {
            if (gamma > 0) return std::cos(2 * w * s);
            if (gamma < 0) return std::cosh(2 * w * s);
            return 1.0;
        };
        auto Q = [&](double s) { return d.lambda + d.b * std::cos(d.Omega * s); };
        const double pos = gauss_kronrod<double, 61>::integrate([&](double s) { return Q(s) * S(t - s); }, 0, t, 15, 1e-15);
        const double mom = gauss_kronrod<double, 61>::integrate([&](double s) { return Q(s) * C(t - s); }, 0, t, 15, 1e-15);
        const DriveResponse r = drive_response({gamma, d, 1.0}, t);
        EXPECT_LT(rel(r.position, pos), 1e-11) << gamma;
        EXPECT_LT(rel(r.momentum, mom), 1e-11) << gamma;
    }
}

TEST(Flow, ClassicalFlowWorkedExample) {
    // gamma = 0, Q = 1 from rest: q = -t^2, p = t
    const PhasePoint p = classical_flow({0.0, ConstantDrive{1.0}, 1.0}, 0.0, 0.0, 1.0);
    EXPECT_NEAR(p.x, -1.0, 1e-14);
    EXPECT_NEAR(p.xi, 1.0, 1e-14);
}

TEST(Flow, UndrivenHarmonicFlowIsPeriodic) {
    const double gamma = 1.7;
    const double period = std::numbers::pi / std::sqrt(gamma);
    const auto c = flow_coefficients({gamma, ConstantDrive{0.0}, 1.0}, period);
    EXPECT_NEAR(c.a1, 1.0, 1e-14);
    EXPECT_NEAR(c.a2, 0.0, 1e-14);
    EXPECT_NEAR(c.b1, 0.0, 1e-14);
    EXPECT_NEAR(c.b2, 1.0, 1e-14);
}

TEST(Flow, DomainChecks) {
    EXPECT_THROW(flow_coefficients({1.0, ConstantDrive{0}, 1.0}, -0.1), DomainError);
    EXPECT_THROW(flow_coefficients({-100.0, ConstantDrive{0}, 1.0}, 50.0), DomainError);
    EXPECT_THROW(OscillatorParams(std::nan(""), ConstantDrive{0}, 1.0), ConfigurationError);
    EXPECT_THROW(OscillatorParams(1.0, CosineDrive{0, 1, -1}, 1.0), ConfigurationError);
    EXPECT_THROW(OscillatorParams(1.0, ConstantDrive{0}, 0.0), ConfigurationError);
    EXPECT_THROW(TabulatedDrive({0.0, 0.0}, {1.0, 2.0}), ConfigurationError);
    EXPECT_THROW(TabulatedDrive({0.0}, {1.0}), ConfigurationError);
}

TEST(Drive, TabulatedInterpolatesAndHoldsEnds) {
    const TabulatedDrive d({0.0, 1.0, 3.0}, {1.0, 3.0, -1.0});
    EXPECT_DOUBLE_EQ(drive_value(d, -5.0), 1.0);
    EXPECT_DOUBLE_EQ(drive_value(d, 0.5), 2.0);
    EXPECT_DOUBLE_EQ(drive_value(d, 2.0), 1.0);
    EXPECT_DOUBLE_EQ(drive_value(d, 9.0), -1.0);
    EXPECT_DOUBLE_EQ(drive_value(CosineDrive{0.5, 2.0, 0.0}, 7.0), 2.5);
}

TEST(Drive, FlatTableEqualsConstantDrive) {
    testkit::Seeded rng(505);
    for (int k = 0; k < 10; ++k) {
        const double gamma = rng.uniform(-1, 1);
        const double lambda = rng.uniform(-1, 1);
        const double t = rng.uniform(0.1, 4);
        const auto a = flow_coefficients({gamma, ConstantDrive{lambda}, 1.0}, t);
        const auto b = flow_coefficients({gamma, TabulatedDrive({0.0, 2.0, 5.0}, {lambda, lambda, lambda}), 1.0}, t);
        EXPECT_LT(rel(a.a3, b.a3), 1e-10);
        EXPECT_LT(rel(a.b3, b.b3), 1e-10);
    }
}

TEST(Propagation, FieldTransportsAlongTheBackwardMap) {
    const closed_forms::AnalyticState st(closed_forms::CoherentGaussian{0.3, -0.4}, 1.0);
    const auto initial = analytic_initial(st);
    const OscillatorParams p(-0.3, CosineDrive{0.1, 0.4, 1.2}, 1.0);
    const PhaseSpaceGrid grid(Grid1D::symmetric(3.0, 21), Grid1D::symmetric(3.0, 17));
    const WignerField w0 = propagate_field(initial, p, 0.0, grid);
    const WignerField wt = propagate_field(initial, p, 1.3, grid);
    const auto c = flow_coefficients(p, 1.3);
    for (std::size_t i = 0; i < 21; ++i) {
        for (std::size_t k = 0; k < 17; ++k) {
            const double x = grid.x().node(i);
            const double xi = grid.xi().node(k);
            EXPECT_DOUBLE_EQ(w0.at(i, k), closed_forms::eval_wigner(st, x, xi));
            const PhasePoint f = backward_map(c, x, xi);
            EXPECT_NEAR(wt.at(i, k), closed_forms::eval_wigner(st, f.x, f.xi), 1e-15);
        }
    }
    EXPECT_LT(liouville_residual(initial, p, 1.3, grid, 1e-3, 1e-3, 1e-3), 1e-4);
    EXPECT_THROW(liouville_residual(initial, p, 1e-4, grid, 1e-3, 1e-3, 1e-3), DomainError);
}

TEST(Propagation, InterpolatedIsBilinearAndZeroOutside) {
    const PhaseSpaceGrid grid(Grid1D::symmetric(2.0, 5), Grid1D::symmetric(2.0, 5));
    WignerField w(grid, 1.0);
    for (std::size_t i = 0; i < 5; ++i) {
        for (std::size_t k = 0; k < 5; ++k) {
            const double x = grid.x().node(i);
            const double xi = grid.xi().node(k);
            w.at(i, k) = 1.0 + 2.0 * x - xi + 0.5 * x * xi;
        }
    }
    const auto f = interpolated(w);
    EXPECT_NEAR(f(0.3, -1.1), 1.0 + 0.6 + 1.1 - 0.165, 1e-14);
    EXPECT_EQ(f(2.5, 0.0), 0.0);
    EXPECT_EQ(f(0.0, -2.01), 0.0);
}

TEST(Stationary, HarmonicEigenResidualsAreSmallAndOtherStatesAreRejected) {
    const closed_forms::AnalyticState st(closed_forms::HarmonicEigen{2, 1.1, true}, 0.8);
    const double e = closed_forms::harmonic_energy(2, 1.1, 0.8);
    const auto r = stationary_residual(st, e, {0.4, -0.2}, 1e-3, 1e-3);
    EXPECT_LT(r.energy, 1e-5);
    EXPECT_LT(r.stationary, 1e-5);
    const auto wrong = stationary_residual(st, e + 0.5, {0.4, -0.2}, 1e-3, 1e-3);
    EXPECT_GT(wrong.energy, 1e-3);
    EXPECT_THROW(stationary_residual(closed_forms::AnalyticState(closed_forms::Box{1.0}, 1.0), 1.0, {0, 0}, 1e-3, 1e-3),
                 UnsupportedError);
}

TEST(Stationary, DeltaBoundStateResiduals) {
    testkit::Seeded rng(506);
    for (int k = 0; k < 6; ++k) {
        const PhasePoint pt{rng.uniform(0.3, 1.5) * (k % 2 ? -1 : 1), rng.uniform(-2, 2)};
        const auto r = delta_stationary_residual(-2.0, 1.0, pt, 2000.0, 1e-3);
        EXPECT_LT(r.energy, 1e-4);
        EXPECT_LT(r.stationary, 1e-4);
    }
    EXPECT_THROW(delta_stationary_residual(1.0, 1.0, {0.5, 0.5}, 100.0, 1e-3), ConfigurationError);
}
