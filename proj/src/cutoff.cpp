#include "contact2d/cutoff.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "contact2d/errors.hpp"
#include "contact2d/quadrature.hpp"

namespace contact2d {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kFourPi = 4.0 * kPi;

using cplx = std::complex<double>;

void check_kappa(double kappa) {
    if (!(kappa > 0.0)) throw domain_error("kappa must be > 0");
}

// Corner piece of the square-geometry loop integral: the square minus its inscribed
// disk, reduced to one smooth angular integral,
//   (1/pi^2) int_0^{pi/4} ln((kappa^2 sec^2 t + z)/(kappa^2 + z)) dt,
// written overflow-free in z/kappa^2.
cplx square_corner(cplx z_over_k2, double rel_tol) {
    auto f = [&](double t) -> cplx {
        const double c = std::cos(t);
        return std::log((1.0 + z_over_k2 * (c * c)) / (1.0 + z_over_k2)) -
               2.0 * std::log(c);
    };
    return integrate_c(f, 0.0, 0.25 * kPi, rel_tol) / (kPi * kPi);
}

}  // namespace

double scheme_cutoff(const RegScheme& s) {
    if (auto* b = std::get_if<SharpCutoff>(&s)) {
        check_kappa(b->kappa);
        return b->kappa;
    }
    const double eps = std::holds_alternative<SquareWell>(s)
                           ? std::get<SquareWell>(s).eps
                           : std::get<Lattice>(s).eps;
    if (!(eps > 0.0)) throw domain_error("eps must be > 0");
    return kPi / eps;
}

double ComplexAmplitude::unitarity_defect() const {
    return value.imag() + 0.5 * std::norm(value);
}

std::complex<double> loop_integral_I(cplx z, double kappa, LoopGeometry geom) {
    check_kappa(kappa);
    if (z == 0.0) throw domain_error("loop integral is logarithmically singular at z = 0");
    if (z.imag() == 0.0 && z.real() < 0.0)
        throw domain_error("z on the negative real axis: use loop_integral_on_shell");
    const cplx w = z / (kappa * kappa);
    switch (geom) {
        case LoopGeometry::disk:
            // (1/4pi) ln((kappa^2+z)/z), branch-safe since Re(1+w) > 0 or Im != 0
            return (std::log(1.0 + w) - std::log(w)) / kFourPi;
        case LoopGeometry::disk_asymptotic:
            return (2.0 * std::log(kappa) - std::log(z)) / kFourPi;
        case LoopGeometry::square:
            return (std::log(1.0 + w) - std::log(w)) / kFourPi + square_corner(w, 1e-11);
    }
    throw domain_error("unknown loop geometry");
}

std::complex<double> loop_integral_on_shell(double k, double kappa, LoopGeometry geom) {
    check_kappa(kappa);
    if (!(k > 0.0)) throw domain_error("on-shell momentum must be > 0");
    if (geom != LoopGeometry::disk_asymptotic && k >= kappa)
        throw domain_error("on-shell momentum must satisfy k < kappa");
    const double r = (k / kappa) * (k / kappa);
    switch (geom) {
        case LoopGeometry::disk:
            // (1/4pi)[ln((kappa^2-k^2)/k^2) + i pi]
            return {(std::log1p(-r) - 2.0 * std::log(k / kappa)) / kFourPi, 0.25};
        case LoopGeometry::disk_asymptotic:
            return {std::log(kappa / k) / (2.0 * kPi), 0.25};
        case LoopGeometry::square: {
            const cplx corner = square_corner(cplx(-r, 0.0), 1e-11);
            return cplx((std::log1p(-r) - 2.0 * std::log(k / kappa)) / kFourPi, 0.25) +
                   corner;
        }
    }
    throw domain_error("unknown loop geometry");
}

ComplexAmplitude t_amplitude_bare(double k, double g0, double kappa, double m,
                                  LoopGeometry geom) {
    if (!(m > 0.0)) throw domain_error("mass must be > 0");
    const cplx den = 1.0 / g0 + 2.0 * m * loop_integral_on_shell(k, kappa, geom);
    if (std::abs(den) < 1e-12)
        throw solver_error("resonance pole: bare amplitude denominator vanishes at k = " +
                           std::to_string(k));
    return {1.0 / den, k};
}

double renormalized_coupling(double g0, double kappa, double mu) {
    check_kappa(kappa);
    if (!(mu > 0.0)) throw domain_error("mu must be > 0");
    if (g0 == 0.0) throw domain_error("g0 must be nonzero");
    const double inv = 1.0 / g0 + std::log(kappa / mu) / kPi;
    if (inv == 0.0) return std::numeric_limits<double>::infinity();
    return 1.0 / inv;
}

ComplexAmplitude t_amplitude_renormalized(double k, double g, double mu) {
    if (!(k > 0.0)) throw domain_error("k must be > 0");
    if (!(mu > 0.0)) throw domain_error("mu must be > 0");
    if (g == 0.0) throw domain_error("g must be nonzero (free theory)");
    const cplx den(1.0 / g - std::log(k / mu) / kPi, 0.5);
    return {1.0 / den, k};
}

double s_wave_phase_shift(double k, double g, double mu) {
    if (!(k > 0.0)) throw domain_error("k must be > 0");
    if (!(mu > 0.0)) throw domain_error("mu must be > 0");
    if (g == 0.0) throw domain_error("g must be nonzero");
    const double cot = 2.0 * std::log(k / mu) / kPi - 2.0 / g;
    return std::atan2(1.0, cot);  // branch (0, pi)
}

BoundState bound_state_energy(double g, double mu) {
    if (!(mu > 0.0)) throw domain_error("mu must be > 0");
    if (g == 0.0 || std::isnan(g)) throw domain_error("g must be nonzero");
    BoundState out;
    out.B = 0.5 * mu * mu * std::exp(2.0 * kPi / g);
    out.scheme = Renormalized{g, mu};
    out.nonpositive_g = !(g > 0.0);
    // residual of Re[1/g - (1/pi) ln(sqrt(2B)/mu)] at the reported B
    const double root = std::sqrt(2.0 * out.B);
    out.residual = (root > 0.0 && std::isfinite(root))
                       ? std::fabs(1.0 / g - std::log(root / mu) / kPi)
                       : std::numeric_limits<double>::quiet_NaN();
    return out;
}

ComplexAmplitude t_amplitude_from_binding(double k, double B) {
    if (!(k > 0.0)) throw domain_error("k must be > 0");
    if (!(B > 0.0)) throw domain_error("B must be > 0");
    const cplx den(std::log(2.0 * B / (k * k)) / (2.0 * kPi), 0.5);
    return {1.0 / den, k};
}

std::complex<double> angular_amplitude(double k, const ComplexAmplitude& T) {
    if (!(k > 0.0)) throw domain_error("k must be > 0");
    return -T.value / std::sqrt(2.0 * kPi * k);
}

BoundState cutoff_bound_state(double g0, double kappa, double m, LoopGeometry geom) {
    check_kappa(kappa);
    if (!(m > 0.0)) throw domain_error("mass must be > 0");
    if (!(g0 < 0.0)) throw domain_error("bare bound state requires g0 < 0");
    if (geom == LoopGeometry::disk_asymptotic)
        throw domain_error("bare bound state needs a finite-cutoff geometry");

    // Solve 1/|g0| = 2m Re I(z = 2mB) on t = ln(2mB/kappa^2). Re I falls with t
    // (disk piece (1/4pi) ln(1 + e^{-t}), corner likewise), so F is increasing.
    auto F = [&](double t) {
        const cplx I = loop_integral_I(cplx(kappa * kappa * std::exp(t), 0.0), kappa, geom);
        return 1.0 / std::fabs(g0) - 2.0 * m * I.real();
    };
    // Disk closed form ln(2mB/kappa^2) = -ln(e^{2pi/(m|g0|)} - 1) seeds the bracket.
    const double w = 2.0 * kPi / (m * std::fabs(g0));
    double t0 = w > 40.0 ? -w : -std::log(std::expm1(w));
    double lo = t0 - 5.0, hi = t0 + 5.0;
    int guard = 0;
    while (F(lo) > 0.0 && guard++ < 200) lo -= 5.0;
    guard = 0;
    while (F(hi) < 0.0 && guard++ < 200) hi += 5.0;
    if (!(F(lo) < 0.0) || !(F(hi) > 0.0))
        throw solver_error("cutoff bound state: bracketing failed on [" +
                           std::to_string(lo) + ", " + std::to_string(hi) + "]");
    for (int it = 0; it < 200 && hi - lo > 1e-14; ++it) {
        const double mid = 0.5 * (lo + hi);
        (F(mid) < 0.0 ? lo : hi) = mid;
    }
    const double t = 0.5 * (lo + hi);
    BoundState out;
    out.B = kappa * kappa * std::exp(t) / (2.0 * m);
    out.scheme = RegScheme{SharpCutoff{kappa}};
    out.residual = std::fabs(g0) * std::fabs(F(t));  // |1 + g0 * 2m I|
    return out;
}

}  // namespace contact2d
