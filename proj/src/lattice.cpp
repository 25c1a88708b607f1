#include "contact2d/lattice.hpp"

#include <cmath>
#include <string>

#include "contact2d/errors.hpp"
#include "contact2d/params.hpp"
#include "contact2d/quadrature.hpp"

namespace contact2d {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Dimensionless Watson-type integral over the unit-spacing zone,
//   W(b) = (1/4pi^2) int_{[-pi,pi]^2} dx dy / ((1-cos x) + (1-cos y) + b).
// Periodic trapezoid sums converge spectrally for b away from 0; the b -> 0
// logarithmic regime integrates the inner variable exactly and subtracts the
// analytic small-x profile of the remaining 1D integrand.
// 1 - cos x as 2 sin^2(x/2): full relative precision near the zone center,
// where the bare difference loses half the digits.
double haversine(double x) {
    const double s = std::sin(0.5 * x);
    return 2.0 * s * s;
}

double watson_trapezoid(double b, int n) {
    // midpoint-shifted nodes avoid evaluating rows twice; integrand is even.
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        const double x = -kPi + (2.0 * kPi) * (i + 0.5) / n;
        const double wx = haversine(x);
        double inner = 0.0;
        for (int j = 0; j < n; ++j) {
            const double y = -kPi + (2.0 * kPi) * (j + 0.5) / n;
            inner += 1.0 / (wx + haversine(y) + b);
        }
        sum += inner;
    }
    return sum / ((double)n * n);
}

double watson_large_b(double b) {
    double prev = watson_trapezoid(b, 32);
    for (int n = 64; n <= 4096; n *= 2) {
        const double cur = watson_trapezoid(b, n);
        if (std::fabs(cur - prev) < 1e-9 * (std::fabs(cur) + 1.0)) return cur;
        prev = cur;
    }
    throw solver_error("Brillouin-zone quadrature did not reach 1e-8 agreement, last = " +
                       std::to_string(prev));
}

// Exact inner integral: (1/2pi) int_{-pi}^{pi} dy / (c + 1 - cos y) = 1/sqrt(c(c+2)).
double watson_small_b(double b) {
    auto reduced = [&](double x) {
        const double c = b + haversine(x);
        return 1.0 / std::sqrt(c * (c + 2.0));
    };
    // Subtract s(x) = 1/sqrt((b + x^2/2)(2 + b)), whose primitive is
    // sqrt(2/(2+b)) asinh(x/sqrt(2b)); the remainder is bounded and smooth
    // apart from a one-sided kink at 0, handled by integrating on [0, pi].
    const double s_norm = 1.0 / std::sqrt(2.0 + b);
    auto remainder = [&](double x) {
        return reduced(x) - s_norm / std::sqrt(b + 0.5 * x * x);
    };
    const double analytic =
        std::sqrt(2.0) * s_norm * std::asinh(kPi / std::sqrt(2.0 * b));
    const double rest = integrate(remainder, 0.0, kPi, 1e-11, 1e-13);
    return (analytic + rest) / kPi;
}

double watson(double b) {
    // crossover where the trapezoid still converges on moderate grids while the
    // subtracted integrand is far from its small-b kink
    return b >= 0.25 ? watson_large_b(b) : watson_small_b(b);
}

}  // namespace

void LatticeSpec::validate() const {
    if (!(eps > 0.0)) throw domain_error("lattice spacing eps must be > 0");
    if (dim != 1 && dim != 2) throw domain_error("lattice dim must be 1 or 2");
    if (!(sigma > 0.0)) throw domain_error("sigma must be > 0");
}

double lattice_dispersion(const std::vector<double>& k, double eps) {
    if (!(eps > 0.0)) throw domain_error("eps must be > 0");
    if (k.empty()) throw domain_error("momentum vector must be non-empty");
    double e = 0.0;
    for (double ki : k) {
        if (std::fabs(ki) > kPi / eps * (1.0 + 1e-12))
            throw domain_error("momentum component outside the Brillouin zone");
        e += haversine(eps * ki) / (eps * eps);
    }
    return e;
}

double bz_green_integral(double B, const LatticeSpec& spec) {
    spec.validate();
    if (!(B > 0.0)) throw domain_error("B must be > 0");
    const double b = B * spec.eps * spec.eps / spec.sigma;
    if (spec.dim == 1) {
        // closed form (eps/sigma)/sqrt(b(b+2)); large-B limit 1/(eps B)
        return (spec.eps / spec.sigma) / std::sqrt(b * (b + 2.0));
    }
    return watson(b) / spec.sigma;
}

std::optional<BoundState> lattice_bound_state(double g0, const LatticeSpec& spec) {
    spec.validate();
    if (g0 >= 0.0) return std::nullopt;
    const double target = 1.0 / std::fabs(g0);

    // G decreasing in B with log divergence at 0 (dim 2) resp. 1/sqrt divergence
    // (dim 1); bisection on ln B is safe once bracketed.
    auto G = [&](double ln_b) { return bz_green_integral(std::exp(ln_b), spec); };
    double lo = std::log(1.0 / (spec.eps * spec.eps));  // B at zone scale
    double hi = lo;
    int guard = 0;
    while (G(lo) < target && guard++ < 300) lo -= 4.0;
    guard = 0;
    while (G(hi) > target && guard++ < 300) hi += 4.0;
    if (!(G(lo) >= target) || !(G(hi) <= target))
        throw solver_error("lattice bound state: bracketing failed for g0 = " +
                           std::to_string(g0));
    for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
        const double mid = 0.5 * (lo + hi);
        (G(mid) >= target ? lo : hi) = mid;
    }
    BoundState out;
    out.B = std::exp(0.5 * (lo + hi));
    out.scheme = RegScheme{Lattice{spec.eps}};
    out.residual = std::fabs(1.0 - std::fabs(g0) * bz_green_integral(out.B, spec));
    if (out.residual >= 1e-10)
        throw solver_error("lattice bound state residual " + std::to_string(out.residual) +
                           " above 1e-10");
    return out;
}

std::vector<ContinuumRow> continuum_limit_check(double m_sq, double c_log, double kappa_ref,
                                                double lambda0,
                                                const std::vector<double>& eps_list,
                                                const LatticeSpec& base, bool running,
                                                double g0_fixed) {
    if (eps_list.empty()) throw domain_error("eps_list must be non-empty");
    for (std::size_t i = 1; i < eps_list.size(); ++i)
        if (!(eps_list[i] < eps_list[i - 1]))
            throw domain_error("eps_list must be positive decreasing");

    std::vector<ContinuumRow> rows;
    rows.reserve(eps_list.size());
    for (double eps : eps_list) {
        if (!(eps > 0.0)) throw domain_error("eps_list must be positive decreasing");
        const double kappa = kPi / eps;
        const double g0 =
            running ? bare_coupling(lambda0, running_bare_mass(m_sq, c_log, kappa, kappa_ref))
                    : g0_fixed;
        if (!(g0 < 0.0))
            throw solver_error("continuum scan needs attractive coupling, got g0 = " +
                               std::to_string(g0) + " at eps = " + std::to_string(eps));
        LatticeSpec spec = base;
        spec.eps = eps;
        const auto bs = lattice_bound_state(g0, spec);
        rows.push_back({eps, kappa, g0, bs->B});
    }
    return rows;
}

}  // namespace contact2d
