#pragma once

namespace wigner::special {

inline constexpr int kMaxPolynomialDegree = 60;

// In-repo error function, absolute error below 1e-15 on the real line.
double erf(double x);
double erfc(double x);

// Physicists' Hermite polynomial by three-term recurrence, 0 <= n <= 60.
double hermite(int n, double x);
// Laguerre polynomial L_n by three-term recurrence, 0 <= n <= 60.
double laguerre(int n, double x);
// 2^n n! sqrt(pi), the squared norm of H_n(x) exp(-x^2/2).
double hermite_norm_squared(int n);

// sin(u)/u with sinc(0) = 1.
double sinc(double u);
// u/sinh(u) with value 1 at 0 and 0 once sinh overflows.
double x_over_sinh(double u);
// (1 - cos(u))/u with value 0 at 0.
double versine_ratio(double u);

}  // namespace wigner::special
