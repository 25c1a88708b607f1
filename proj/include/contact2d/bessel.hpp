#pragma once

namespace contact2d {

// Cylindrical functions of orders 0 and 1, target 1e-10 relative accuracy.
// Series for small argument, Hankel/uniform asymptotics or a continued fraction
// for large argument; all internals in long double.
double bessel_j0(double x);
double bessel_j1(double x);
double bessel_y0(double x);  // requires x > 0
double bessel_y1(double x);  // requires x > 0
double bessel_i0(double x);
double bessel_i1(double x);
double bessel_k0(double x);  // requires x > 0
double bessel_k1(double x);  // requires x > 0

// m-th positive zero of J0 (m >= 1), McMahon expansion polished by Newton.
double bessel_j0_zero(int m);
// number of positive zeros of J0 strictly below x
int count_j0_zeros_below(double x);

}  // namespace contact2d
