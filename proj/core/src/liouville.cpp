#include "wigner/liouville.hpp"

#include <algorithm>
#include <array>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>
#include <string>

#include "wigner/errors.hpp"
#include "wigner/special.hpp"

namespace wigner::liouville {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMaxHyperbolicArg = 700.0;

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Fundamental solutions of f'' = -4 gamma f:
//   C = cos(2 sqrt(gamma) t), S = sin(2 sqrt(gamma) t)/sqrt(gamma), T = int_0^t S.
struct Fundamental {
    double C, S, T;
};

Fundamental fundamental(double gamma, double t) {
    if (gamma > kGammaEps) {
        const double w = std::sqrt(gamma);
        const double sc = special::sinc(w * t);
        return {std::cos(2.0 * w * t), std::sin(2.0 * w * t) / w, t * t * sc * sc};
    }
    if (gamma < -kGammaEps) {
        const double w = std::sqrt(-gamma);
        if (2.0 * w * t > kMaxHyperbolicArg) {
            throw DomainError("hyperbolic flow overflows at t = " + std::to_string(t));
        }
        const double r = 1.0 / special::x_over_sinh(w * t);
        return {std::cosh(2.0 * w * t), std::sinh(2.0 * w * t) / w, t * t * r * r};
    }
    // four-term Taylor series in u = -4 gamma t^2
    const double u = -4.0 * gamma * t * t;
    const double C = 1.0 + u / 2.0 * (1.0 + u / 12.0 * (1.0 + u / 30.0));
    const double S = 2.0 * t * (1.0 + u / 6.0 * (1.0 + u / 20.0 * (1.0 + u / 42.0)));
    const double T = t * t * (1.0 + u / 12.0 * (1.0 + u / 30.0 * (1.0 + u / 56.0)));
    return {C, S, T};
}

// M_m = int_0^t s^m cos(Omega s) ds for m = 0..7.
std::array<double, 8> cosine_moments(double Omega, double t) {
    std::array<double, 8> M{};
    const double wt = std::abs(Omega) * t;
    if (wt <= 2.0) {
        for (int m = 0; m < 8; ++m) {
            double sum = 0.0;
            double coeff = std::pow(t, m + 1);
            const double w2t2 = Omega * Omega * t * t;
            for (int j = 0; j < 60; ++j) {
                const double term = coeff / (2.0 * j + m + 1.0);
                sum += term;
                coeff *= -w2t2 / ((2.0 * j + 1.0) * (2.0 * j + 2.0));
                if (std::abs(term) < 1e-18 * std::abs(sum)) {
                    break;
                }
            }
            M[m] = sum;
        }
        return M;
    }
    const double sn = std::sin(Omega * t);
    const double cs = std::cos(Omega * t);
    std::array<double, 8> N{};
    M[0] = sn / Omega;
    N[0] = (1.0 - cs) / Omega;
    double tm = 1.0;
    for (int m = 1; m < 8; ++m) {
        tm *= t;
        M[m] = tm * sn / Omega - m / Omega * N[m - 1];
        N[m] = -tm * cs / Omega + m / Omega * M[m - 1];
    }
    return M;
}

// (int_0^t cos(Omega s) S(s) ds, int_0^t cos(Omega s) C(s) ds)
std::pair<double, double> cosine_integrals(double gamma, double Omega, double t) {
    if (gamma > kGammaEps) {
        const double w = std::sqrt(gamma);
        const double k = 2.0 * w;
        const double js = 0.5 * t * (special::versine_ratio((k + Omega) * t) + special::versine_ratio((k - Omega) * t)) / w;
        const double jc = 0.5 * t * (special::sinc((Omega - k) * t) + special::sinc((Omega + k) * t));
        return {js, jc};
    }
    if (gamma < -kGammaEps) {
        const double w = std::sqrt(-gamma);
        const double k = 2.0 * w;
        const double kt = k * t;
        const double sh = std::sinh(kt);
        const double ch = std::cosh(kt);
        const double c = std::cos(Omega * t);
        const double s = std::sin(Omega * t);
        const double shh = std::sinh(0.5 * kt);
        const double sinh_half = std::sin(0.5 * Omega * t);
        const double den = k * k + Omega * Omega;
        // cosh(kt) cos(Omega t) - 1 without cancellation
        const double chc_minus_1 = 2.0 * shh * shh * c - 2.0 * sinh_half * sinh_half;
        const double js = (k * chc_minus_1 + Omega * sh * s) / (w * den);
        const double jc = (k * sh * c + Omega * ch * s) / den;
        return {js, jc};
    }
    const auto M = cosine_moments(Omega, t);
    const double u = -4.0 * gamma;
    // S(s) = 2 s sum u^k s^{2k}/(2k+1)!, C(s) = sum u^k s^{2k}/(2k)!
    const double js = 2.0 * (M[1] + u * M[3] / 6.0 + u * u * M[5] / 120.0 + u * u * u * M[7] / 5040.0);
    const double jc = M[0] + u * M[2] / 2.0 + u * u * M[4] / 24.0 + u * u * u * M[6] / 720.0;
    return {js, jc};
}

// N_m = int_0^t s^m sin(Omega s) ds for m = 0..7.
std::array<double, 8> sine_moments(double Omega, double t) {
    std::array<double, 8> N{};
    const double wt = std::abs(Omega) * t;
    if (wt <= 2.0) {
        for (int m = 0; m < 8; ++m) {
            double sum = 0.0;
            double coeff = Omega * std::pow(t, m + 2);
            const double w2t2 = Omega * Omega * t * t;
            for (int j = 0; j < 60; ++j) {
                const double term = coeff / (2.0 * j + m + 2.0);
                sum += term;
                coeff *= -w2t2 / ((2.0 * j + 2.0) * (2.0 * j + 3.0));
                if (std::abs(term) <= 1e-18 * std::abs(sum)) {
                    break;
                }
            }
            N[m] = sum;
        }
        return N;
    }
    const double sn = std::sin(Omega * t);
    const double cs = std::cos(Omega * t);
    std::array<double, 8> M{};
    M[0] = sn / Omega;
    N[0] = (1.0 - cs) / Omega;
    double tm = 1.0;
    for (int m = 1; m < 8; ++m) {
        tm *= t;
        M[m] = tm * sn / Omega - m / Omega * N[m - 1];
        N[m] = -tm * cs / Omega + m / Omega * M[m - 1];
    }
    return N;
}

// (int_0^t cos(Omega s) S(t - s) ds, int_0^t cos(Omega s) C(t - s) ds)
std::pair<double, double> cosine_response(double gamma, double Omega, double t) {
    if (gamma > kGammaEps) {
        const double w = std::sqrt(gamma);
        const double k = 2.0 * w;
        // (cos Omega t - cos kt) k / (w (k^2 - Omega^2)), resonance carried by sinc
        const double ks = 2.0 * t * std::sin(0.5 * (k + Omega) * t) * special::sinc(0.5 * (k - Omega) * t) / (k + Omega);
        // (k sin kt - Omega sin Omega t) / (k^2 - Omega^2) = half-sum of sin((k -+ Omega)t)/(k -+ Omega) parts
        const double kc = 0.5 * t * (special::sinc((k - Omega) * t) + special::sinc((k + Omega) * t)) * std::cos(Omega * t) +
                          0.5 * t * (special::versine_ratio((k + Omega) * t) - special::versine_ratio((k - Omega) * t)) *
                              std::sin(Omega * t);
        return {ks, kc};
    }
    if (gamma < -kGammaEps) {
        const double w = std::sqrt(-gamma);
        const double k = 2.0 * w;
        const double den = k * k + Omega * Omega;
        const double shh = std::sinh(0.5 * k * t);
        const double sh = std::sin(0.5 * Omega * t);
        // 2 (cosh kt - cos Omega t) / (k^2 + Omega^2)
        const double ks = 4.0 * (shh * shh + sh * sh) / den;
        // (k sinh kt + Omega sin Omega t) / (k^2 + Omega^2)
        const double kc = (k * std::sinh(k * t) + Omega * std::sin(Omega * t)) / den;
        return {ks, kc};
    }
    const auto M = cosine_moments(Omega, t);
    const auto N = sine_moments(Omega, t);
    const double c = std::cos(Omega * t);
    const double s = std::sin(Omega * t);
    const double u = -4.0 * gamma;
    // cos(Omega (t - s)) = c cos(Omega s) + s sin(Omega s), substituted s -> t - s
    const auto mom = [&](int m) { return c * M[m] + s * N[m]; };
    const double ks = 2.0 * (mom(1) + u * mom(3) / 6.0 + u * u * mom(5) / 120.0 + u * u * u * mom(7) / 5040.0);
    const double kc = mom(0) + u * mom(2) / 2.0 + u * u * mom(4) / 24.0 + u * u * u * mom(6) / 720.0;
    return {ks, kc};
}

// Adaptive Simpson with Richardson extrapolation.
template <class F>
double simpson_richardson(const F& f, double a, double b, double fa, double fm, double fb, double whole, double tol,
                          int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    if (depth <= 0) {
        throw NumericalError("tabulated drive quadrature did not reach 1e-10");
    }
    return simpson_richardson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_richardson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

template <class F>
double simpson(const F& f, double a, double b, double tol) {
    if (b <= a) {
        return 0.0;
    }
    const double fa = f(a);
    const double fb = f(b);
    const double fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_richardson(f, a, b, fa, fm, fb, whole, tol, 40);
}

// Integration breakpoints of the drive inside [0, t].
std::vector<double> breakpoints(const DrivePolicy& drive, double t) {
    std::vector<double> pts{0.0};
    if (const auto* tab = std::get_if<TabulatedDrive>(&drive)) {
        for (double s : tab->times) {
            if (s > 0.0 && s < t) {
                pts.push_back(s);
            }
        }
    }
    pts.push_back(t);
    return pts;
}

template <class F>
double gauss_kronrod(const F& f, const std::vector<double>& pts) {
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        double err = 0.0;
        total += boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, pts[i], pts[i + 1], 20, 1e-14, &err);
    }
    return total;
}

}  // namespace

TabulatedDrive::TabulatedDrive(std::vector<double> t, std::vector<double> v) : times(std::move(t)), values(std::move(v)) {
    if (times.size() < 2 || times.size() != values.size()) {
        throw ConfigurationError("tabulated drive needs matching times/values with at least 2 entries");
    }
    for (std::size_t i = 0; i + 1 < times.size(); ++i) {
        if (!(times[i + 1] > times[i])) {
            throw ConfigurationError("tabulated drive times must be strictly increasing");
        }
    }
}

double drive_value(const DrivePolicy& drive, double t) {
    return std::visit(overloaded{
                          [](const ConstantDrive& d) { return d.lambda; },
                          [t](const CosineDrive& d) { return d.lambda + d.b * std::cos(d.Omega * t); },
                          [t](const TabulatedDrive& d) {
                              if (t <= d.times.front()) {
                                  return d.values.front();
                              }
                              if (t >= d.times.back()) {
                                  return d.values.back();
                              }
                              const auto it = std::upper_bound(d.times.begin(), d.times.end(), t);
                              const std::size_t i = static_cast<std::size_t>(it - d.times.begin()) - 1;
                              const double f = (t - d.times[i]) / (d.times[i + 1] - d.times[i]);
                              return d.values[i] + f * (d.values[i + 1] - d.values[i]);
                          },
                      },
                      drive);
}

OscillatorParams::OscillatorParams(double g, DrivePolicy d, double h) : gamma(g), drive(std::move(d)), hbar(h) {
    if (!std::isfinite(gamma)) {
        throw ConfigurationError("gamma must be finite");
    }
    if (!(hbar > 0.0)) {
        throw ConfigurationError("hbar must be positive");
    }
    if (const auto* c = std::get_if<CosineDrive>(&drive); c && c->Omega < 0.0) {
        throw ConfigurationError("Omega must be non-negative");
    }
}

FlowCoefficients flow_coefficients(const OscillatorParams& params, double t) {
    if (!(t >= 0.0)) {
        throw DomainError("flow time must be non-negative");
    }
    const double g = params.gamma;
    const Fundamental f = fundamental(g, t);
    FlowCoefficients c{f.C, -f.S, 0.0, g * f.S, f.C, 0.0, t};

    // a3 = int_0^t Q a2, b3 = int_0^t Q b2
    std::visit(overloaded{
                   [&](const ConstantDrive& d) {
                       c.a3 = -d.lambda * f.T;
                       c.b3 = 0.5 * d.lambda * f.S;
                   },
                   [&](const CosineDrive& d) {
                       const auto [js, jc] = cosine_integrals(g, d.Omega, t);
                       c.a3 = -d.lambda * f.T - d.b * js;
                       c.b3 = 0.5 * d.lambda * f.S + d.b * jc;
                   },
                   [&](const TabulatedDrive& d) {
                       const auto pts = breakpoints(params.drive, t);
                       double is = 0.0;
                       double ic = 0.0;
                       for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
                           is += simpson([&](double s) { return drive_value(d, s) * fundamental(g, s).S; }, pts[i],
                                         pts[i + 1], 1e-12);
                           ic += simpson([&](double s) { return drive_value(d, s) * fundamental(g, s).C; }, pts[i],
                                         pts[i + 1], 1e-12);
                       }
                       c.a3 = -is;
                       c.b3 = ic;
                   },
               },
               params.drive);
    return c;
}

PhasePoint backward_map(const FlowCoefficients& c, double x, double xi) {
    return {c.a1 * x + c.a2 * xi + c.a3, c.b1 * x + c.b2 * xi + c.b3};
}

DriveResponse drive_response(const OscillatorParams& params, double t) {
    if (!(t >= 0.0)) {
        throw DomainError("flow time must be non-negative");
    }
    const double g = params.gamma;
    const Fundamental f = fundamental(g, t);
    return std::visit(overloaded{
                          [&](const ConstantDrive& d) { return DriveResponse{d.lambda * f.T, 0.5 * d.lambda * f.S}; },
                          [&](const CosineDrive& d) {
                              const auto [ks, kc] = cosine_response(g, d.Omega, t);
                              return DriveResponse{d.lambda * f.T + d.b * ks, 0.5 * d.lambda * f.S + d.b * kc};
                          },
                          [&](const TabulatedDrive& d) {
                              const auto pts = breakpoints(params.drive, t);
                              DriveResponse r{0.0, 0.0};
                              for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
                                  r.position += simpson(
                                      [&](double s) { return drive_value(d, s) * fundamental(g, t - s).S; }, pts[i],
                                      pts[i + 1], 1e-12);
                                  r.momentum += simpson(
                                      [&](double s) { return drive_value(d, s) * fundamental(g, t - s).C; }, pts[i],
                                      pts[i + 1], 1e-12);
                              }
                              return r;
                          },
                      },
                      params.drive);
}

PhaseSpaceFunction analytic_initial(const closed_forms::AnalyticState& state) {
    return [state](double x, double xi) { return closed_forms::eval_wigner(state, x, xi); };
}

PhaseSpaceFunction interpolated(const WignerField& field) {
    return [field](double x, double xi) {
        const Grid1D& gx = field.grid.x();
        const Grid1D& gp = field.grid.xi();
        const double u = (x - gx.x_min()) / gx.step();
        const double v = (xi - gp.x_min()) / gp.step();
        if (u < 0.0 || v < 0.0 || u > static_cast<double>(gx.count() - 1) || v > static_cast<double>(gp.count() - 1)) {
            return 0.0;
        }
        const std::size_t i = std::min(static_cast<std::size_t>(u), gx.count() - 2);
        const std::size_t j = std::min(static_cast<std::size_t>(v), gp.count() - 2);
        const double fu = u - static_cast<double>(i);
        const double fv = v - static_cast<double>(j);
        return (1.0 - fu) * ((1.0 - fv) * field.at(i, j) + fv * field.at(i, j + 1)) +
               fu * ((1.0 - fv) * field.at(i + 1, j) + fv * field.at(i + 1, j + 1));
    };
}

WignerField propagate_field(const PhaseSpaceFunction& initial, const OscillatorParams& params, double t,
                            const PhaseSpaceGrid& grid) {
    const FlowCoefficients c = flow_coefficients(params, t);
    WignerField out(grid, params.hbar);
    for (std::size_t i = 0; i < grid.x().count(); ++i) {
        const double x = grid.x().node(i);
        for (std::size_t j = 0; j < grid.xi().count(); ++j) {
            const PhasePoint p = backward_map(c, x, grid.xi().node(j));
            out.at(i, j) = initial(p.x, p.xi);
        }
    }
    return out;
}

PhasePoint classical_flow(const OscillatorParams& params, double x, double xi, double t) {
    if (!(t >= 0.0)) {
        throw DomainError("flow time must be non-negative");
    }
    const double g = params.gamma;
    const Fundamental f = fundamental(g, t);
    const auto pts = breakpoints(params.drive, t);
    const double conv_s =
        gauss_kronrod([&](double s) { return drive_value(params.drive, s) * fundamental(g, t - s).S; }, pts);
    const double conv_c =
        gauss_kronrod([&](double s) { return drive_value(params.drive, s) * fundamental(g, t - s).C; }, pts);
    return {f.C * x - f.S * xi - conv_s, g * f.S * x + f.C * xi + conv_c};
}

double liouville_residual(const PhaseSpaceFunction& initial, const OscillatorParams& params, double t,
                          const PhaseSpaceGrid& grid, double dt, double dx, double dxi) {
    if (!(dt > 0.0 && dx > 0.0 && dxi > 0.0)) {
        throw ConfigurationError("finite-difference steps must be positive");
    }
    if (t < dt) {
        throw DomainError("liouville_residual needs t >= dt");
    }
    const FlowCoefficients c0 = flow_coefficients(params, t);
    const FlowCoefficients cm = flow_coefficients(params, t - dt);
    const FlowCoefficients cp = flow_coefficients(params, t + dt);
    const auto W = [&](const FlowCoefficients& c, double x, double xi) {
        const PhasePoint p = backward_map(c, x, xi);
        return initial(p.x, p.xi);
    };
    const double q = drive_value(params.drive, t);
    double worst = 0.0;
    for (std::size_t i = 0; i < grid.x().count(); ++i) {
        const double x = grid.x().node(i);
        for (std::size_t j = 0; j < grid.xi().count(); ++j) {
            const double xi = grid.xi().node(j);
            const double wt = (W(cp, x, xi) - W(cm, x, xi)) / (2.0 * dt);
            const double wx = (W(c0, x + dx, xi) - W(c0, x - dx, xi)) / (2.0 * dx);
            const double wp = (W(c0, x, xi + dxi) - W(c0, x, xi - dxi)) / (2.0 * dxi);
            worst = std::max(worst, std::abs(wt + 2.0 * xi * wx - (2.0 * params.gamma * x + q) * wp));
        }
    }
    return worst;
}

ResidualPair stationary_residual(const closed_forms::AnalyticState& state, double energy, PhasePoint pt, double dx,
                                 double dxi) {
    const auto* he = std::get_if<closed_forms::HarmonicEigen>(&state.kind());
    if (he == nullptr) {
        throw UnsupportedError("stationary_residual expects a HarmonicEigen state");
    }
    if (!(dx > 0.0 && dxi > 0.0)) {
        throw ConfigurationError("finite-difference steps must be positive");
    }
    const double h = state.hbar();
    const double w2 = he->omega * he->omega;
    const auto W = [&](double x, double xi) { return closed_forms::eval_wigner(state, x, xi); };
    const double x = pt.x;
    const double xi = pt.xi;
    const double w0 = W(x, xi);
    const double wxx = (W(x + dx, xi) - 2.0 * w0 + W(x - dx, xi)) / (dx * dx);
    const double wpp = (W(x, xi + dxi) - 2.0 * w0 + W(x, xi - dxi)) / (dxi * dxi);
    const double wx = (W(x + dx, xi) - W(x - dx, xi)) / (2.0 * dx);
    const double wp = (W(x, xi + dxi) - W(x, xi - dxi)) / (2.0 * dxi);
    // V = omega^2 x^2, V' = 2 omega^2 x, V'' = 2 omega^2
    const double hw = -0.25 * h * h * wxx + (xi * xi + w2 * x * x) * w0 - 0.125 * h * h * (2.0 * w2) * wpp;
    const double transport = -2.0 * xi * wx + 2.0 * w2 * x * wp;
    return {std::abs(energy * w0 - hw), std::abs(transport)};
}

ResidualPair delta_stationary_residual(double gamma, double hbar, PhasePoint pt, double xi_cutoff, double dx) {
    if (!(gamma < 0.0)) {
        throw ConfigurationError("delta bound state needs gamma < 0");
    }
    if (!(xi_cutoff > 0.0 && dx > 0.0)) {
        throw ConfigurationError("xi_cutoff and dx must be positive");
    }
    const closed_forms::AnalyticState state(closed_forms::DeltaBound{gamma}, hbar);
    const auto W = [&](double x, double xi) { return closed_forms::eval_wigner(state, x, xi); };
    const double h = hbar;
    const double energy = -gamma * gamma / (4.0 * h * h);
    const double kappa = std::abs(gamma) / (2.0 * h * h);
    const double x = pt.x;
    const double xi = pt.xi;
    const double a = 2.0 * x / h;  // x0 = 0

    using gl = boost::math::quadrature::gauss<double, 20>;
    const double width = std::min(0.5, 0.5 / (1.0 + std::abs(a)));
    const auto panels = static_cast<long long>(std::ceil(2.0 * xi_cutoff / width));
    const double pw = 2.0 * xi_cutoff / static_cast<double>(panels);
    double ic = 0.0;
    double is = 0.0;
    for (long long k = 0; k < panels; ++k) {
        const double lo = -xi_cutoff + pw * static_cast<double>(k);
        ic += gl::integrate([&](double s) { return W(x, s) * std::cos(a * (s - xi)); }, lo, lo + pw);
        is += gl::integrate([&](double s) { return W(x, s) * std::sin(a * (xi - s)); }, lo, lo + pw);
    }
    // |xi'| > cutoff: W ~ L cos(a xi') / xi'^2 leaves a non-oscillating half of each product
    const double L = h * kappa * kappa / kPi * std::exp(-2.0 * kappa * std::abs(x));
    ic += L * std::cos(a * xi) / xi_cutoff;
    is += L * std::sin(a * xi) / xi_cutoff;

    const double w0 = W(x, xi);
    const double wxx = (W(x + dx, xi) - 2.0 * w0 + W(x - dx, xi)) / (dx * dx);
    const double wx = (W(x + dx, xi) - W(x - dx, xi)) / (2.0 * dx);
    const double hw = -0.25 * h * h * wxx + xi * xi * w0 + gamma / (kPi * h) * ic;
    const double transport = -2.0 * xi * wx + 2.0 * gamma / (kPi * h * h) * is;
    return {std::abs(energy * w0 - hw), std::abs(transport)};
}

}  // namespace wigner::liouville
