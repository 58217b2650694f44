#include "wigner/closed_forms.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <numbers>
#include <string>

#include "wigner/errors.hpp"
#include "wigner/special.hpp"

namespace wigner::closed_forms {

namespace {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require(bool ok, const std::string& what) {
    if (!ok) {
        throw ConfigurationError(what);
    }
}

void check_degree(int n) { require(n >= 0 && n <= special::kMaxPolynomialDegree, "degree n must lie in [0, 60]"); }

double harmonic_alpha(const HarmonicEigen& s, double hbar) { return std::sqrt(s.omega / hbar); }

}  // namespace

AnalyticState::AnalyticState(StateKind kind, double hbar) : kind_(kind), hbar_(hbar) {
    require(hbar > 0.0 && std::isfinite(hbar), "hbar must be positive");
    std::visit(overloaded{
                   [](const Box& s) { require(s.R > 0.0, "box half-width R must be positive"); },
                   [](const GaussGeneral& s) { require(s.a1 > 0.0, "a1 must be positive"); },
                   [](const CoherentGaussian&) {},
                   [](const Hermite& s) { check_degree(s.n); },
                   [](const FreeEvolvedGaussian& s) { require(std::isfinite(s.t), "t must be finite"); },
                   [](const DeltaBound& s) { require(s.gamma < 0.0, "delta bound state needs gamma < 0"); },
                   [](const Soliton& s) { require(s.nu < 0.0, "soliton needs nu < 0"); },
                   [](const HarmonicEigen& s) {
                       check_degree(s.n);
                       require(s.omega > 0.0, "omega must be positive");
                   },
               },
               kind_);
}

cplx eval_state(const AnalyticState& state, double x) {
    const double h = state.hbar();
    return std::visit(
        overloaded{
            [&](const Box& s) -> cplx { return std::abs(x) <= s.R ? 1.0 / std::sqrt(2.0 * s.R) : 0.0; },
            [&](const GaussGeneral& s) -> cplx {
                const cplx e = cplx(s.a1, s.a2) * x * x + cplx(s.b1, s.b2) * x + cplx(s.c1, s.c2);
                return std::exp(-0.5 * e);
            },
            [&](const CoherentGaussian& s) -> cplx {
                const double amp = std::pow(kPi * h, -0.25) * std::exp(-(x - s.a) * (x - s.a) / (2.0 * h));
                return std::polar(amp, s.p0 * x / h);
            },
            [&](const Hermite& s) -> cplx {
                double v = special::hermite(s.n, x) * std::exp(-0.5 * x * x);
                if (s.normalized) {
                    v /= std::sqrt(special::hermite_norm_squared(s.n));
                }
                return v;
            },
            [&](const FreeEvolvedGaussian& s) -> cplx {
                const double ht = h * s.t;
                const double den = 1.0 + 16.0 * ht * ht;
                const cplx z = cplx(1.0, -4.0 * ht) / den;
                return std::pow(2.0 / kPi, 0.25) * std::sqrt(z) * std::exp(-x * x * z);
            },
            [&](const DeltaBound& s) -> cplx {
                const double kappa = std::abs(s.gamma) / (2.0 * h * h);
                return std::sqrt(kappa) * std::exp(-kappa * std::abs(x));
            },
            [&](const Soliton& s) -> cplx {
                const double A = std::sqrt(-s.nu) / (std::sqrt(8.0) * h);
                const double B = -s.nu / (4.0 * h * h);
                return A / std::cosh(B * x);
            },
            [&](const HarmonicEigen& s) -> cplx {
                const double alpha = harmonic_alpha(s, h);
                const double u = alpha * x;
                double v = special::hermite(s.n, u) * std::exp(-0.5 * u * u);
                if (s.normalized) {
                    v *= std::sqrt(alpha / special::hermite_norm_squared(s.n));
                }
                return v;
            },
        },
        state.kind());
}

double eval_wigner(const AnalyticState& state, double x, double xi) {
    const double h = state.hbar();
    return std::visit(
        overloaded{
            [&](const Box& s) {
                const double d = s.R - std::abs(x);
                if (d < 0.0) {
                    return 0.0;
                }
                return d / (kPi * s.R * h) * special::sinc(2.0 * xi * d / h);
            },
            [&](const GaussGeneral& s) {
                const double k = 2.0 * xi / h + 2.0 * s.a2 * x + s.b2;
                const double e = -s.a1 * x * x - s.b1 * x - s.c1 - k * k / (4.0 * s.a1);
                return std::exp(e) / (h * std::sqrt(kPi * s.a1));
            },
            [&](const CoherentGaussian& s) {
                const double dx = x - s.a;
                const double dp = xi - s.p0;
                return std::exp(-(dx * dx + dp * dp) / h) / (kPi * h);
            },
            [&](const Hermite& s) {
                const double r = x * x + xi * xi / (h * h);
                const double sign = (s.n % 2 == 0) ? 1.0 : -1.0;
                const double scale = s.normalized ? 1.0 : special::hermite_norm_squared(s.n);
                return scale * sign / (kPi * h) * std::exp(-r) * special::laguerre(s.n, 2.0 * r);
            },
            [&](const FreeEvolvedGaussian& s) {
                const double u = x - 2.0 * xi * s.t;
                return std::exp(-xi * xi / (2.0 * h * h) - 2.0 * u * u) / (kPi * h);
            },
            [&](const DeltaBound& s) {
                // hbar kappa^2 e^{-2 kappa|x|} (xi cos th + kappa hbar sin th) / (pi xi (kappa^2 hbar^2 + xi^2)),
                // th = 2|x| xi / hbar; the xi -> 0 limit is carried by sinc.
                const double kappa = std::abs(s.gamma) / (2.0 * h * h);
                const double ax = std::abs(x);
                const double th = 2.0 * ax * xi / h;
                const double kh = kappa * h;
                const double bracket = std::cos(th) + kh * (2.0 * ax / h) * special::sinc(th);
                return h * kappa * kappa * std::exp(-2.0 * kappa * ax) * bracket / (kPi * (kh * kh + xi * xi));
            },
            [&](const Soliton& s) {
                const double c1 = s.nu / (2.0 * h * h);
                const double c2 = 4.0 * kPi * h / s.nu;
                return special::sinc(2.0 * x * xi / h) * special::x_over_sinh(c1 * x) * special::x_over_sinh(c2 * xi) /
                       (kPi * h);
            },
            [&](const HarmonicEigen& s) {
                const double r = (xi * xi + s.omega * s.omega * x * x) / (h * s.omega);
                const double sign = (s.n % 2 == 0) ? 1.0 : -1.0;
                const double scale =
                    s.normalized ? 1.0 : special::hermite_norm_squared(s.n) / harmonic_alpha(s, h);
                return scale * sign / (kPi * h) * std::exp(-r) * special::laguerre(s.n, 2.0 * r);
            },
        },
        state.kind());
}

double norm_squared(const AnalyticState& state) {
    const double h = state.hbar();
    return std::visit(overloaded{
                          [](const GaussGeneral& s) {
                              return std::sqrt(kPi / s.a1) * std::exp(s.b1 * s.b1 / (4.0 * s.a1) - s.c1);
                          },
                          [](const Hermite& s) { return s.normalized ? 1.0 : special::hermite_norm_squared(s.n); },
                          [&](const HarmonicEigen& s) {
                              return s.normalized ? 1.0
                                                  : special::hermite_norm_squared(s.n) / harmonic_alpha(s, h);
                          },
                          [](const auto&) { return 1.0; },
                      },
                      state.kind());
}

bool hudson_positivity(const AnalyticState& state) {
    return std::visit(overloaded{
                          [](const GaussGeneral&) { return true; },
                          [](const CoherentGaussian&) { return true; },
                          [](const FreeEvolvedGaussian&) { return true; },
                          [](const Hermite& s) { return s.n == 0; },
                          [](const HarmonicEigen& s) { return s.n == 0; },
                          [](const auto&) { return false; },
                      },
                      state.kind());
}

double harmonic_energy(int n, double omega, double hbar) {
    require(n >= 0, "n must be non-negative");
    require(omega >= 0.0, "omega must be non-negative");
    return (2.0 * n + 1.0) * omega * hbar;
}

double box_l1_growth(double R, double hbar, double Xi) {
    require(R > 0.0 && hbar > 0.0 && Xi > 0.0, "box_l1_growth needs R, hbar, Xi > 0");
    // |W| integrates to (2/(pi R)) int_0^R G(c s) ds, c = 2 Xi / hbar, G(Z) = int_0^Z |sin z|/z dz.
    // Integration by parts: int_0^R G(c s) ds = R G(cR) - (1/c) int_0^{cR} |sin z| dz.
    const double c = 2.0 * Xi / hbar;
    const double Z = c * R;
    using gl = boost::math::quadrature::gauss<double, 20>;
    const auto integrand = [](double z) { return std::abs(special::sinc(z)); };
    double G = 0.0;
    const auto periods = static_cast<long long>(std::floor(Z / kPi));
    for (long long k = 0; k < periods; ++k) {
        G += gl::integrate(integrand, kPi * static_cast<double>(k), kPi * static_cast<double>(k + 1));
    }
    const double rest_start = kPi * static_cast<double>(periods);
    if (Z > rest_start) {
        G += gl::integrate(integrand, rest_start, Z);
    }
    const double abs_sin = 2.0 * static_cast<double>(periods) + (1.0 - std::cos(Z - rest_start));
    return 2.0 / (kPi * R) * (R * G - abs_sin / c);
}

WaveSample sample_state(const AnalyticState& state, const Grid1D& grid) {
    std::vector<cplx> v(grid.count());
    for (std::size_t k = 0; k < grid.count(); ++k) {
        v[k] = eval_state(state, grid.node(k));
    }
    return WaveSample(grid, std::move(v), state.hbar());
}

WignerField sample_wigner(const AnalyticState& state, const PhaseSpaceGrid& grid) {
    WignerField f(grid, state.hbar());
    for (std::size_t i = 0; i < grid.x().count(); ++i) {
        const double x = grid.x().node(i);
        for (std::size_t j = 0; j < grid.xi().count(); ++j) {
            f.at(i, j) = eval_wigner(state, x, grid.xi().node(j));
        }
    }
    return f;
}

}  // namespace wigner::closed_forms
