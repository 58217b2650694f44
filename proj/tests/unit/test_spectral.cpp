#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "seeded.hpp"
#include "wigner/errors.hpp"
#include "wigner/spectral.hpp"

using namespace wigner;
using cplx = std::complex<double>;

namespace {

std::vector<cplx> random_signal(testkit::Seeded& rng, std::size_t n) {
    std::vector<cplx> v(n);
    for (auto& z : v) {
        z = {rng.uniform(-1, 1), rng.uniform(-1, 1)};
    }
    return v;
}

}  // namespace

TEST(Fft, MatchesNaiveDft) {
    testkit::Seeded rng(201);
    for (std::size_t n : {1u, 2u, 4u, 16u, 128u}) {
        const auto x = random_signal(rng, n);
        std::vector<cplx> y = x;
        spectral::Fft(n).forward(y);
        for (std::size_t k = 0; k < n; ++k) {
            cplx want = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                want += x[j] * std::polar(1.0, -2.0 * std::numbers::pi * double(j * k % n) / double(n));
            }
            EXPECT_LT(std::abs(y[k] - want), 1e-12 * n) << n << ":" << k;
        }
    }
}

TEST(Fft, BackwardInvertsForwardUpToLength) {
    testkit::Seeded rng(202);
    const std::size_t n = 1024;
    const auto x = random_signal(rng, n);
    std::vector<cplx> y = x;
    const spectral::Fft fft(n);
    fft.forward(y);
    fft.backward(y);
    for (std::size_t j = 0; j < n; ++j) {
        EXPECT_LT(std::abs(y[j] / double(n) - x[j]), 1e-14);
    }
}

TEST(Fft, RejectsNonPowerOfTwo) {
    EXPECT_THROW(spectral::Fft(12), ConfigurationError);
    std::vector<cplx> v(8);
    EXPECT_THROW(spectral::Fft(16).forward(v), ConfigurationError);
    EXPECT_EQ(spectral::next_pow2(1), 1u);
    EXPECT_EQ(spectral::next_pow2(17), 32u);
    EXPECT_EQ(spectral::next_pow2(64), 64u);
}

TEST(ChirpZ, MatchesDirectSumOnSeededGeometries) {
    testkit::Seeded rng(203);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n_in = static_cast<std::size_t>(rng.integer(1, 90));
        const std::size_t n_out = static_cast<std::size_t>(rng.integer(1, 120));
        const double y0 = rng.uniform(-5, 5);
        const double dy = rng.uniform(0.01, 0.5);
        const double w0 = rng.uniform(-10, 10);
        const double dw = rng.uniform(0.01, 0.5);
        const auto in = random_signal(rng, n_in);
        std::vector<cplx> out(n_out);
        spectral::ChirpZ(n_in, y0, dy, n_out, w0, dw).apply(in, out);
        double scale = 0.0;
        for (const auto& z : in) {
            scale += std::abs(z);
        }
        for (std::size_t m = 0; m < n_out; ++m) {
            cplx want = 0.0;
            for (std::size_t j = 0; j < n_in; ++j) {
                const long double ph = -(static_cast<long double>(w0) + m * static_cast<long double>(dw)) *
                                       (static_cast<long double>(y0) + j * static_cast<long double>(dy));
                want += in[j] * std::polar(1.0, static_cast<double>(ph));
            }
            EXPECT_LT(std::abs(out[m] - want), 1e-12 * scale) << "trial " << trial << " m " << m;
        }
    }
}

TEST(UnitPhase, ReducesLargePhasesAccurately) {
    for (long double ph : {0.0L, 1.0L, 1e6L, -3.5e8L}) {
        const cplx z = spectral::unit_phase(ph);
        EXPECT_NEAR(std::abs(z), 1.0, 1e-15);
        EXPECT_NEAR(z.real(), static_cast<double>(cosl(ph)), 1e-15);
        EXPECT_NEAR(z.imag(), static_cast<double>(sinl(ph)), 1e-15);
    }
}
