#include <gtest/gtest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>

#include "seeded.hpp"
#include "wigner/closed_forms.hpp"
#include "wigner/errors.hpp"
#include "wigner/tunneling.hpp"

using namespace wigner;
using namespace wigner::tunneling;

namespace {

TunnelScenario figure1(double p0) { return TunnelScenario({-5.0, p0, 1.0}, 1.0, liouville::ConstantDrive{0.0}); }

}  // namespace

TEST(Tunnel, FigureOneScenario) {
    EXPECT_EQ(critical_momentum(figure1(5.0)), 5.0);
    EXPECT_NEAR(asymptotic_probability(figure1(5.0)), 0.5, 1e-12);
    EXPECT_GT(asymptotic_probability(figure1(4.0)), 0.5);
    EXPECT_LT(asymptotic_probability(figure1(6.0)), 0.5);
    EXPECT_EQ(classify_regime(figure1(4.0)), Regime::Subcritical);
    EXPECT_EQ(classify_regime(figure1(5.0)), Regime::Critical);
    EXPECT_EQ(classify_regime(figure1(6.0)), Regime::Supercritical);
    EXPECT_EQ(to_string(Regime::Critical), "critical");
    for (double p0 : {4.0, 5.0, 6.0}) {
        EXPECT_NEAR(survival_probability(figure1(p0), 15.0), asymptotic_probability(figure1(p0)), 1e-6);
        EXPECT_NEAR(survival_probability(figure1(p0), 0.0), 0.5 * std::erfc(-5.0), 1e-15);
    }
}

TEST(Tunnel, AsymptoteDecreasesWithMomentum) {
    double prev = 1.0;
    for (double p0 = 0.0; p0 <= 10.0; p0 += 0.25) {
        const double p = asymptotic_probability(figure1(p0));
        EXPECT_LE(p, prev);
        prev = p;
    }
}

TEST(Tunnel, DrivenCriticalMomentumGivesOneHalf) {
    testkit::Seeded rng(701);
    for (int k = 0; k < 40; ++k) {
        const double omega = rng.uniform(0.3, 2.0);
        const liouville::CosineDrive d{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(0.0, 3.0)};
        const double a = rng.uniform(-6, -1);
        const double hbar = rng.uniform(0.3, 1.5);
        const double pc = critical_momentum(TunnelScenario({a, 0.0, hbar}, omega, d));
        const TunnelScenario s({a, pc, hbar}, omega, d);
        EXPECT_NEAR(asymptotic_probability(s), 0.5, 1e-12);
        EXPECT_NEAR(survival_probability(s, large_time(omega)), 0.5, 1e-6);
    }
}

TEST(Tunnel, SurvivalIsTheLeftMassOfTheDensity) {
    testkit::Seeded rng(702);
    for (int k = 0; k < 20; ++k) {
        const TunnelScenario s({rng.uniform(-6, -1), rng.uniform(0, 8), rng.uniform(0.3, 1.5)}, rng.uniform(0.3, 2.0),
                               liouville::CosineDrive{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(0, 3)});
        const double t = rng.uniform(0.0, 3.0);
        const auto shape = gaussian::packet_shape(s.packet, s.oscillator(), t);
        const double w = std::sqrt(s.packet.hbar * shape.A);
        const double lo = std::min(shape.v, 0.0) - 40.0 * w;
        const double direct = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
            [&](double x) { return gaussian::density(shape, s.packet.hbar, x); }, lo, 0.0, 20, 1e-15);
        EXPECT_NEAR(survival_probability(s, t), direct, 1e-10);
    }
}

TEST(Tunnel, EnergiesAgreeWithPhaseSpaceAverage) {
    // <xi^2 - omega^2 x^2> over the initial Wigner function, by nested quadrature
    using boost::math::quadrature::gauss_kronrod;
    for (auto [a, p0, omega, hbar] : {std::tuple{-5.0, 4.0, 1.0, 1.0}, std::tuple{-2.0, 1.5, 0.6, 0.4}}) {
        const closed_forms::AnalyticState st(closed_forms::CoherentGaussian{a, p0}, hbar);
        const double r = 12.0 * std::sqrt(hbar);
        const double avg = gauss_kronrod<double, 61>::integrate(
            [&](double x) {
                return gauss_kronrod<double, 61>::integrate(
                    [&](double xi) { return (xi * xi - omega * omega * x * x) * closed_forms::eval_wigner(st, x, xi); },
                    p0 - r, p0 + r, 10, 1e-14);
            },
            a - r, a + r, 10, 1e-13);
        const Energies e = energies(TunnelScenario({a, p0, hbar}, omega, liouville::ConstantDrive{0.0}));
        EXPECT_NEAR(e.quantum, avg, 1e-9 * std::max(1.0, std::abs(avg)));
        EXPECT_DOUBLE_EQ(e.classical, p0 * p0 - omega * omega * a * a);
    }
}

TEST(Tunnel, DrivenScenariosHaveNoEnergies) {
    const TunnelScenario s({-5.0, 4.0, 1.0}, 1.0, liouville::CosineDrive{0.1, 0.2, 1.0});
    EXPECT_THROW(energies(s), UnsupportedError);
    const TunnelReport r = report(s);
    EXPECT_TRUE(std::isnan(r.E_q));
    EXPECT_TRUE(std::isnan(r.E_c));
    EXPECT_FALSE(std::isnan(r.P_inf));
}

TEST(Tunnel, Preconditions) {
    EXPECT_THROW(TunnelScenario({-5.0, 4.0, 1.0}, 0.0, liouville::ConstantDrive{0.0}), ConfigurationError);
    EXPECT_THROW(TunnelScenario({-5.0, 4.0, 0.0}, 1.0, liouville::ConstantDrive{0.0}), ConfigurationError);
    const TunnelScenario tab({-5.0, 4.0, 1.0}, 1.0, liouville::TabulatedDrive({0.0, 1.0}, {0.0, 1.0}));
    EXPECT_THROW(asymptotic_probability(tab), UnsupportedError);
    EXPECT_NO_THROW(survival_probability(tab, 2.0));
}

TEST(Tunnel, FigureOneSeries) {
    const auto s = figure1_series(-5.0, 1.0, 1.0, {4.0, 5.0, 6.0}, {0.0, 5.0, 15.0});
    ASSERT_EQ(s.P.size(), 3u);
    ASSERT_EQ(s.P[0].size(), 3u);
    EXPECT_GT(s.P[0][2], 0.5);
    EXPECT_NEAR(s.P[1][2], 0.5, 1e-6);
    EXPECT_LT(s.P[2][2], 0.5);
    EXPECT_DOUBLE_EQ(s.P[2][1], survival_probability(figure1(6.0), 5.0));
    EXPECT_DOUBLE_EQ(large_time(1.0), 10.0);
    EXPECT_DOUBLE_EQ(large_time(0.25), 30.0);
}
