#include "contact2d/bessel.hpp"

#include <cmath>
#include <string>

#include "contact2d/errors.hpp"

namespace contact2d {
namespace {

constexpr long double kPi = 3.141592653589793238462643383279502884L;
constexpr long double kEuler = 0.577215664901532860606512090082402431L;

// Oscillatory kinds switch from power series to the Hankel expansion here; the
// exponential kinds keep series further out (their series have no cancellation).
constexpr double kOscSwitch = 14.0;
constexpr double kISwitch = 18.0;
constexpr double kKSwitch = 2.0;

struct PQ {
    long double p, q;
};

// DLMF 10.17: P_nu, Q_nu coefficients a_k(nu) via a_k = a_{k-1}(4nu^2-(2k-1)^2)/(8k).
PQ hankel_pq(int nu, long double x) {
    const long double fournu2 = 4.0L * nu * nu;
    long double a = 1.0L;          // a_k(nu) / x^k
    long double p = 1.0L, q = 0.0L;
    long double prev = 1.0L;
    for (int k = 1; k <= 60; ++k) {
        a *= (fournu2 - (2.0L * k - 1.0L) * (2.0L * k - 1.0L)) / (8.0L * k * x);
        if (std::fabs((double)a) >= std::fabs((double)prev)) break;  // divergent tail
        prev = a;
        const int r = k % 4;
        if (r == 0) p += a;
        else if (r == 1) q += a;
        else if (r == 2) p -= a;
        else q -= a;
        if (std::fabs((double)a) < 1e-19L) break;
    }
    return {p, q};
}

long double j0_series(long double x) {
    const long double t = 0.25L * x * x;
    long double term = 1.0L, sum = 1.0L;
    for (int k = 1; k <= 80; ++k) {
        term *= -t / ((long double)k * k);
        sum += term;
        if (std::fabs((double)term) < 1e-20 * (1.0 + std::fabs((double)sum))) break;
    }
    return sum;
}

long double j1_series(long double x) {
    const long double t = 0.25L * x * x;
    long double term = 0.5L * x, sum = term;
    for (int k = 1; k <= 80; ++k) {
        term *= -t / ((long double)k * (k + 1));
        sum += term;
        if (std::fabs((double)term) < 1e-20 * (1.0 + std::fabs((double)sum))) break;
    }
    return sum;
}

long double y0_series(long double x) {
    const long double t = 0.25L * x * x;
    long double term = 1.0L, sum = 0.0L, h = 0.0L;
    for (int k = 1; k <= 80; ++k) {
        term *= -t / ((long double)k * k);
        h += 1.0L / k;
        sum += -term * h;  // (-1)^{k+1} H_k t^k/(k!)^2
        if (std::fabs((double)term) < 1e-20) break;
    }
    return (2.0L / kPi) * ((std::log(x / 2.0L) + kEuler) * j0_series(x) + sum);
}

long double y1_series(long double x) {
    const long double t = 0.25L * x * x;
    long double term = 1.0L;  // t^k / (k! (k+1)!)
    long double hk = 0.0L, hk1 = 1.0L;
    long double sum = term * (hk + hk1);
    for (int k = 1; k <= 80; ++k) {
        term *= -t / ((long double)k * (k + 1));
        hk += 1.0L / k;
        hk1 += 1.0L / (k + 1);
        sum += term * (hk + hk1);
        if (std::fabs((double)term) < 1e-20) break;
    }
    return (2.0L / kPi) * (std::log(x / 2.0L) + kEuler) * j1_series(x) -
           2.0L / (kPi * x) - (x / (2.0L * kPi)) * sum;
}

long double i0_series(long double x) {
    const long double t = 0.25L * x * x;
    long double term = 1.0L, sum = 1.0L;
    for (int k = 1; k <= 120; ++k) {
        term *= t / ((long double)k * k);
        sum += term;
        if (term < 1e-20L * sum) break;
    }
    return sum;
}

long double i1_series(long double x) {
    const long double t = 0.25L * x * x;
    long double term = 0.5L * x, sum = term;
    for (int k = 1; k <= 120; ++k) {
        term *= t / ((long double)k * (k + 1));
        sum += term;
        if (std::fabs((double)term) < 1e-20 * std::fabs((double)sum)) break;
    }
    return sum;
}

// Asymptotic sum for I_nu: sum_k (-1)^k a_k(nu)/x^k (optimally truncated).
long double i_asym_sum(int nu, long double x) {
    const long double fournu2 = 4.0L * nu * nu;
    long double a = 1.0L, sum = 1.0L, prev = 1.0L;
    for (int k = 1; k <= 60; ++k) {
        a *= (fournu2 - (2.0L * k - 1.0L) * (2.0L * k - 1.0L)) / (8.0L * k * x);
        if (std::fabs((double)a) >= std::fabs((double)prev)) break;
        prev = a;
        sum += (k % 2 ? -a : a);
        if (std::fabs((double)a) < 1e-19L) break;
    }
    return sum;
}

long double k0_series(long double x) {
    const long double t = 0.25L * x * x;
    long double term = 1.0L, h = 0.0L, sum = 0.0L;
    for (int k = 1; k <= 60; ++k) {
        term *= t / ((long double)k * k);
        h += 1.0L / k;
        sum += term * h;
        if (term * h < 1e-20L * (1.0L + sum)) break;
    }
    return -(std::log(x / 2.0L) + kEuler) * i0_series(x) + sum;
}

long double k1_series(long double x) {
    const long double t = 0.25L * x * x;
    long double term = 1.0L;  // t^k/(k!(k+1)!)
    long double hk = 0.0L, hk1 = 1.0L;
    long double sum = term * (hk + hk1);
    for (int k = 1; k <= 60; ++k) {
        term *= t / ((long double)k * (k + 1));
        hk += 1.0L / k;
        hk1 += 1.0L / (k + 1);
        sum += term * (hk + hk1);
        if (term * (hk + hk1) < 1e-20L * sum) break;
    }
    return 1.0L / x + (std::log(x / 2.0L) + kEuler) * i1_series(x) - (x / 4.0L) * sum;
}

// Steed/Thompson-Barnett CF2 at nu = 0: K0 and the K1/K0 ratio in one sweep.
void k_cf2(long double x, long double& k0, long double& k1) {
    const long double a1 = 0.25L;
    long double b = 2.0L * (1.0L + x);
    long double d = 1.0L / b;
    long double delh = d, h = d;
    long double q1 = 0.0L, q2 = 1.0L;
    long double q = a1, c = a1, a = -a1;
    long double s = 1.0L + q * delh;
    for (int i = 2; i <= 30000; ++i) {
        a -= 2.0L * (i - 1);
        c = -a * c / i;
        const long double qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0L;
        d = 1.0L / (b + a * d);
        delh = (b * d - 1.0L) * delh;
        h += delh;
        const long double dels = q * delh;
        s += dels;
        if (std::fabs((double)(dels / s)) < 1e-19) {
            h *= a1;
            k0 = std::sqrt(kPi / (2.0L * x)) * std::exp(-x) / s;
            k1 = k0 * (x + 0.5L - h) / x;
            return;
        }
    }
    throw solver_error("K-Bessel continued fraction did not converge at x = " +
                       std::to_string((double)x));
}

void check_positive(double x, const char* fn) {
    if (!(x > 0.0)) throw domain_error(std::string(fn) + " requires x > 0");
}

void check_nonneg(double x, const char* fn) {
    if (x < 0.0 || std::isnan(x)) throw domain_error(std::string(fn) + " requires x >= 0");
}

}  // namespace

double bessel_j0(double x) {
    check_nonneg(x, "bessel_j0");
    if (x < kOscSwitch) return (double)j0_series(x);
    const auto [p, q] = hankel_pq(0, x);
    const long double chi = (long double)x - 0.25L * kPi;
    return (double)(std::sqrt(2.0L / (kPi * x)) * (p * std::cos(chi) - q * std::sin(chi)));
}

double bessel_j1(double x) {
    check_nonneg(x, "bessel_j1");
    if (x < kOscSwitch) return (double)j1_series(x);
    const auto [p, q] = hankel_pq(1, x);
    const long double chi = (long double)x - 0.75L * kPi;
    return (double)(std::sqrt(2.0L / (kPi * x)) * (p * std::cos(chi) - q * std::sin(chi)));
}

double bessel_y0(double x) {
    check_positive(x, "bessel_y0");
    if (x < kOscSwitch) return (double)y0_series(x);
    const auto [p, q] = hankel_pq(0, x);
    const long double chi = (long double)x - 0.25L * kPi;
    return (double)(std::sqrt(2.0L / (kPi * x)) * (p * std::sin(chi) + q * std::cos(chi)));
}

double bessel_y1(double x) {
    check_positive(x, "bessel_y1");
    if (x < kOscSwitch) return (double)y1_series(x);
    const auto [p, q] = hankel_pq(1, x);
    const long double chi = (long double)x - 0.75L * kPi;
    return (double)(std::sqrt(2.0L / (kPi * x)) * (p * std::sin(chi) + q * std::cos(chi)));
}

double bessel_i0(double x) {
    check_nonneg(x, "bessel_i0");
    if (x < kISwitch) return (double)i0_series(x);
    return (double)(std::exp((long double)x) / std::sqrt(2.0L * kPi * x) * i_asym_sum(0, x));
}

double bessel_i1(double x) {
    check_nonneg(x, "bessel_i1");
    if (x < kISwitch) return (double)i1_series(x);
    return (double)(std::exp((long double)x) / std::sqrt(2.0L * kPi * x) * i_asym_sum(1, x));
}

double bessel_k0(double x) {
    check_positive(x, "bessel_k0");
    if (x <= kKSwitch) return (double)k0_series(x);
    long double k0, k1;
    k_cf2(x, k0, k1);
    return (double)k0;
}

double bessel_k1(double x) {
    check_positive(x, "bessel_k1");
    if (x <= kKSwitch) return (double)k1_series(x);
    long double k0, k1;
    k_cf2(x, k0, k1);
    return (double)k1;
}

double bessel_j0_zero(int m) {
    if (m < 1) throw domain_error("bessel_j0_zero requires m >= 1");
    // McMahon expansion, then Newton with J0' = -J1.
    const long double beta = ((long double)m - 0.25L) * kPi;
    const long double b8 = 8.0L * beta;
    long double z = beta + 1.0L / b8 - 124.0L / (3.0L * b8 * b8 * b8) +
                    120928.0L / (15.0L * b8 * b8 * b8 * b8 * b8);
    for (int it = 0; it < 4; ++it) {
        const double fz = bessel_j0((double)z);
        const double dfz = -bessel_j1((double)z);
        if (dfz == 0.0) break;
        z -= fz / dfz;
    }
    return (double)z;
}

int count_j0_zeros_below(double x) {
    check_nonneg(x, "count_j0_zeros_below");
    if (x <= 2.404) return 0;  // first zero 2.40482...
    int m = (int)std::floor(x / (double)kPi + 0.25);
    if (m < 0) m = 0;
    while (bessel_j0_zero(m + 1) < x) ++m;
    while (m >= 1 && bessel_j0_zero(m) >= x) --m;
    return m;
}

}  // namespace contact2d
