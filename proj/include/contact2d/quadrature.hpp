#pragma once

#include <complex>
#include <functional>

namespace contact2d {

// Adaptive Gauss-Kronrod (7,15) on [a,b]; error from the embedded difference.
// Throws solver_error when the panel budget is exhausted before reaching tolerance.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol, double abs_tol = 0.0);

std::complex<double> integrate_c(const std::function<std::complex<double>(double)>& f,
                                 double a, double b, double rel_tol, double abs_tol = 0.0);

}  // namespace contact2d
