#include "wigner/special.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "wigner/errors.hpp"

namespace wigner::special {

namespace {

constexpr double kInvSqrtPi = 0.56418958354775628694807945156077259;

// exp(-x^2) with the rounding of x^2 compensated.
double gauss_exp(double x) {
    const double s = x * x;
    const double e = std::fma(x, x, -s);
    return std::exp(-s) * (1.0 - e);
}

// erf(x) = 2/sqrt(pi) exp(-x^2) sum_n 2^n x^(2n+1) / (2n+1)!!, all terms positive.
double erf_series(double x) {
    const double x2 = x * x;
    double term = x;
    double sum = x;
    for (int n = 1; n < 200; ++n) {
        term *= 2.0 * x2 / (2.0 * n + 1.0);
        sum += term;
        if (term < 1e-17 * sum) {
            break;
        }
    }
    return 2.0 * kInvSqrtPi * gauss_exp(x) * sum;
}

// erfc(x) for x >= 2 by the Laplace continued fraction, modified Lentz.
double erfc_fraction(double x) {
    constexpr double tiny = 1e-300;
    double f = x;
    double c = x;
    double d = 0.0;
    for (int k = 1; k < 500; ++k) {
        const double a = 0.5 * k;
        d = x + a * d;
        if (std::abs(d) < tiny) {
            d = tiny;
        }
        c = x + a / c;
        if (std::abs(c) < tiny) {
            c = tiny;
        }
        d = 1.0 / d;
        const double delta = c * d;
        f *= delta;
        if (std::abs(delta - 1.0) < 1e-17) {
            break;
        }
    }
    return kInvSqrtPi * gauss_exp(x) / f;
}

void check_degree(int n) {
    if (n < 0 || n > kMaxPolynomialDegree) {
        throw ConfigurationError("polynomial degree " + std::to_string(n) + " outside [0, 60]");
    }
}

}  // namespace

double erf(double x) {
    if (std::isnan(x)) {
        return x;
    }
    const double ax = std::abs(x);
    double r;
    if (ax < 2.0) {
        r = erf_series(ax);
    } else if (ax < 6.5) {
        r = 1.0 - erfc_fraction(ax);
    } else {
        r = 1.0;
    }
    return x < 0.0 ? -r : r;
}

double erfc(double x) {
    if (std::isnan(x)) {
        return x;
    }
    if (x < 0.0) {
        return 2.0 - erfc(-x);
    }
    if (x < 2.0) {
        return 1.0 - erf_series(x);
    }
    if (x > 27.3) {
        return 0.0;
    }
    return erfc_fraction(x);
}

double hermite(int n, double x) {
    check_degree(n);
    double h_prev = 1.0;
    if (n == 0) {
        return h_prev;
    }
    double h = 2.0 * x;
    for (int k = 1; k < n; ++k) {
        const double next = 2.0 * x * h - 2.0 * k * h_prev;
        h_prev = h;
        h = next;
    }
    return h;
}

double laguerre(int n, double x) {
    check_degree(n);
    double l_prev = 1.0;
    if (n == 0) {
        return l_prev;
    }
    double l = 1.0 - x;
    for (int k = 1; k < n; ++k) {
        const double next = ((2.0 * k + 1.0 - x) * l - k * l_prev) / (k + 1.0);
        l_prev = l;
        l = next;
    }
    return l;
}

double hermite_norm_squared(int n) {
    check_degree(n);
    double v = std::sqrt(std::numbers::pi);
    for (int k = 1; k <= n; ++k) {
        v *= 2.0 * k;
    }
    return v;
}

double sinc(double u) {
    if (std::abs(u) < 1e-4) {
        const double u2 = u * u;
        return 1.0 - u2 / 6.0 * (1.0 - u2 / 20.0);
    }
    return std::sin(u) / u;
}

double x_over_sinh(double u) {
    const double au = std::abs(u);
    if (au < 1e-4) {
        const double u2 = u * u;
        return 1.0 - u2 / 6.0 * (1.0 - 7.0 * u2 / 60.0);
    }
    if (au > 700.0) {
        return 2.0 * au * std::exp(-au);
    }
    return u / std::sinh(u);
}

double versine_ratio(double u) {
    if (std::abs(u) < 1e-4) {
        const double u2 = u * u;
        return 0.5 * u * (1.0 - u2 / 12.0);
    }
    const double s = std::sin(0.5 * u);
    return 2.0 * s * s / u;
}

}  // namespace wigner::special
