#include "contact2d/squarewell.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "contact2d/bessel.hpp"
#include "contact2d/errors.hpp"

namespace contact2d {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Interior regular radial solution of the s-wave equation at r = eps:
// oscillatory J0(q r) when q^2 = 2m(E - V0) > 0, evanescent I0(a r) otherwise.
struct Interior {
    double v;      // R(eps)
    double dv;     // R'(eps)
    int nodes;     // nodes of R in (0, eps)
};

Interior interior_at_eps(double q2, double eps) {
    Interior out;
    if (q2 >= 0.0) {
        const double q = std::sqrt(q2);
        out.v = bessel_j0(q * eps);
        out.dv = -q * bessel_j1(q * eps);
        out.nodes = count_j0_zeros_below(q * eps);
    } else {
        const double a = std::sqrt(-q2);
        out.v = bessel_i0(a * eps);
        out.dv = a * bessel_i1(a * eps);
        out.nodes = 0;
    }
    return out;
}

// Log-derivative matching function for a bound state at energy -B, normalized so
// the two products enter with comparable scale.
double matching(const WellSpec& w, double B) {
    const double absV = std::fabs(w.depth());
    const double q = std::sqrt(2.0 * w.m * (absV - B));
    const double kb = std::sqrt(2.0 * w.m * B);
    const double t1 = q * bessel_j1(q * w.eps) * bessel_k0(kb * w.eps);
    const double t2 = kb * bessel_k1(kb * w.eps) * bessel_j0(q * w.eps);
    const double scale = std::fabs(t1) + std::fabs(t2);
    return scale > 0.0 ? (t1 - t2) / scale : 0.0;
}

double bisect_ln_b(const WellSpec& w, double b_lo, double b_hi, double f_lo) {
    double lo = std::log(b_lo), hi = std::log(b_hi);
    for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double f = matching(w, std::exp(mid));
        if (f == 0.0) return std::exp(mid);
        ((f > 0.0) == (f_lo > 0.0) ? lo : hi) = mid;
    }
    return std::exp(0.5 * (lo + hi));
}

}  // namespace

double WellSpec::depth() const {
    return norm == WellNorm::literal ? 2.0 * g0 / (eps * eps) : g0 / (kPi * eps * eps);
}

double WellSpec::delta_strength() const {
    return depth() * kPi * eps * eps;  // = 2*pi*g0 (literal) or g0 (unit)
}

void WellSpec::validate() const {
    if (!(eps > 0.0)) throw domain_error("well radius eps must be > 0");
    if (!(m > 0.0)) throw domain_error("mass must be > 0");
    if (!std::isfinite(g0)) throw domain_error("g0 must be finite");
}

std::vector<WellBoundState> well_bound_states(const WellSpec& well, int scan_points) {
    well.validate();
    if (scan_points < 8) throw domain_error("scan_points must be >= 8");
    std::vector<WellBoundState> states;
    if (well.g0 >= 0.0) return states;

    const double absV = std::fabs(well.depth());

    // Linear midpoint scan over (0, |V0|), then a logarithmic tail toward B -> 0
    // to catch exponentially shallow states.
    std::vector<double> grid;
    grid.reserve(scan_points + 640);
    for (int j = scan_points - 1; j >= 0; --j)
        grid.push_back(absV * (j + 0.5) / scan_points);
    double b = absV * 0.5 / scan_points;
    while (b > 1e-120 * absV) {
        b *= 0.25;
        grid.push_back(b);
    }
    // grid is descending in B
    double prev_b = grid.front();
    double prev_f = matching(well, prev_b);
    for (std::size_t i = 1; i < grid.size(); ++i) {
        const double cur_b = grid[i];
        const double cur_f = matching(well, cur_b);
        if (prev_f == 0.0) {
            states.push_back({prev_b, 0.0});
        } else if (cur_f != 0.0 && (cur_f > 0.0) != (prev_f > 0.0)) {
            const double root = bisect_ln_b(well, cur_b, prev_b, cur_f);
            states.push_back({root, std::fabs(matching(well, root))});
        }
        prev_b = cur_b;
        prev_f = cur_f;
    }
    if (states.empty())
        throw solver_error(
            "well bound-state bracketing failed: no sign change over B in (" +
            std::to_string(grid.back()) + ", " + std::to_string(absV) + ") for g0 = " +
            std::to_string(well.g0));
    std::sort(states.begin(), states.end(),
              [](const WellBoundState& a, const WellBoundState& b2) { return a.B > b2.B; });
    return states;
}

double s_wave_phase_shift_well(const WellSpec& well, double k) {
    well.validate();
    if (!(k > 0.0)) throw domain_error("k must be > 0");
    if (well.g0 == 0.0) return 0.0;

    const double eps = well.eps;
    const double q2 = k * k - 2.0 * well.m * well.depth();
    const Interior in = interior_at_eps(q2, eps);

    // Match R and R' to A J0(kr) + B_c Y0(kr) at r = eps via the Wronskian
    // J1 Y0 - J0 Y1 = 2/(pi x); tan(delta) = -B_c/A after the standard convention.
    const double j0 = bessel_j0(k * eps), j1 = bessel_j1(k * eps);
    const double y0 = bessel_y0(k * eps), y1 = bessel_y1(k * eps);
    const double alpha = 0.5 * kPi * eps * (-k * in.v * y1 - in.dv * y0);
    const double beta = 0.5 * kPi * eps * (in.dv * j0 + k * in.v * j1);
    const double principal = std::atan2(-beta, alpha);

    // Continuous Levinson branch: compare interior vs free Pruefer phases of
    // u = sqrt(r) R at r = eps; each counts its nodes. The true phase lies in
    // (N pi, (N+1) pi) with u > 0 start, so the atan2 lift is 2 pi ceil(N/2).
    auto lifted_phase = [&](double v, double dv, int nodes) {
        const double uv = k * v;
        const double udv = 0.5 * v / eps + dv;
        return std::atan2(uv, udv) + 2.0 * kPi * std::ceil(0.5 * nodes);
    };
    const double psi_v = lifted_phase(in.v, in.dv, in.nodes);
    const int free_nodes = count_j0_zeros_below(k * eps);
    const double psi_f = lifted_phase(j0, -k * j1, free_nodes);
    const double dpsi = psi_v - psi_f;

    return principal + 2.0 * kPi * std::round((dpsi - principal) / (2.0 * kPi));
}

double effective_cutoff_calibration(const WellSpec& well, const BoundState& reference) {
    well.validate();
    if (!(well.g0 < 0.0)) throw domain_error("calibration requires an attractive well");
    if (!(reference.B > 0.0)) throw domain_error("reference bound state must have B > 0");
    const RegScheme* scheme = std::get_if<RegScheme>(&reference.scheme);
    const SharpCutoff* sharp = scheme ? std::get_if<SharpCutoff>(scheme) : nullptr;
    if (!sharp) throw domain_error("calibration reference must be a sharp-cutoff bound state");

    const double g0_eq = well.delta_strength();  // < 0 with g0 < 0
    const double target = std::log(reference.B);
    auto F = [&](double ln_kappa) {
        return std::log(cutoff_bound_state(g0_eq, std::exp(ln_kappa), well.m).B) - target;
    };  // increasing in ln kappa (B ~ kappa^2 at fixed coupling)
    double lo = std::log(sharp->kappa) - 18.0;
    double hi = std::log(sharp->kappa) + 18.0;
    double f_lo = F(lo), f_hi = F(hi);
    if (!(f_lo < 0.0) || !(f_hi > 0.0))
        throw solver_error("calibration failed: no matching cutoff in search bracket [" +
                           std::to_string(std::exp(lo)) + ", " + std::to_string(std::exp(hi)) +
                           "]");
    for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
        const double mid = 0.5 * (lo + hi);
        (F(mid) < 0.0 ? lo : hi) = mid;
    }
    return std::exp(0.5 * (lo + hi)) * well.eps / kPi;
}

}  // namespace contact2d
